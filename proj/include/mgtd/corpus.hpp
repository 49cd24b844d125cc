#ifndef MGTD_CORPUS_HPP
#define MGTD_CORPUS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "mgtd/error.hpp"
#include "mgtd/rng.hpp"

namespace mgtd {

enum class Label { Human = 0, Machine = 1 };

inline const char* to_string(Label l) {
    return l == Label::Human ? "human" : "machine";
}

inline Label label_from_string(std::string_view s) {
    if (s == "human") return Label::Human;
    if (s == "machine") return Label::Machine;
    throw Error("unknown label \"" + std::string(s) + "\" (expected \"human\" or \"machine\")");
}

struct LabeledDocument {
    std::string id;
    std::string text;    // UTF-8, non-empty after trimming
    Label label = Label::Human;
    std::string dataset; // free tag, e.g. "medical_abstract"

    bool operator==(const LabeledDocument&) const = default;
};

struct Corpus {
    std::string name;
    std::vector<LabeledDocument> docs;

    std::size_t size() const { return docs.size(); }
    bool empty() const { return docs.empty(); }

    bool operator==(const Corpus&) const = default;
};

enum class CorpusFormat { Jsonl, Csv };

inline CorpusFormat corpus_format_from_string(std::string_view s) {
    if (s == "jsonl") return CorpusFormat::Jsonl;
    if (s == "csv") return CorpusFormat::Csv;
    throw Error("unknown corpus format \"" + std::string(s) + "\" (expected jsonl or csv)");
}

namespace detail {

inline bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

inline void validate_doc(const LabeledDocument& doc, std::size_t line,
                         std::unordered_set<std::string>& seen_ids) {
    auto where = [&] { return " (line " + std::to_string(line) + ")"; };
    if (doc.id.empty()) throw Error("empty document id" + where());
    if (is_blank(doc.text)) throw Error("empty text in document \"" + doc.id + "\"" + where());
    if (!seen_ids.insert(doc.id).second)
        throw Error("duplicate id \"" + doc.id + "\"" + where());
}

// RFC-4180 record reader: fields separated by commas, optionally quoted with
// "" as the embedded-quote escape; quoted fields may contain newlines.
// Returns false on end of input. `line` tracks the record's first line.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& fields, std::size_t& record_line) {
        fields.clear();
        int c = in_.get();
        if (c == EOF) return false;
        record_line = line_;
        std::string field;
        bool quoted = false;
        while (true) {
            if (c == EOF) {
                fields.push_back(std::move(field));
                if (quoted) throw Error("unterminated quoted field (line " +
                                        std::to_string(record_line) + ")");
                return true;
            }
            char ch = static_cast<char>(c);
            if (ch == '\n') ++line_;
            if (quoted) {
                if (ch == '"') {
                    int peek = in_.peek();
                    if (peek == '"') {
                        field.push_back('"');
                        in_.get();
                    } else {
                        quoted = false;
                    }
                } else {
                    field.push_back(ch);
                }
            } else if (ch == '"' && field.empty()) {
                quoted = true;
            } else if (ch == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (ch == '\r' && in_.peek() == '\n') {
                // swallow, newline handled next
            } else if (ch == '\n') {
                fields.push_back(std::move(field));
                return true;
            } else {
                field.push_back(ch);
            }
            c = in_.get();
        }
    }

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

} // namespace detail

// Reads a labeled corpus from disk.  JSON Lines: one object per line with
// keys id, text, label, dataset.  CSV: header id,text,label,dataset with
// RFC-4180 quoting.  Malformed records are reported with their line number.
inline Corpus load_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.name = path;
    std::unordered_set<std::string> seen_ids;

    if (format == CorpusFormat::Jsonl) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (detail::is_blank(line)) continue;
            nlohmann::json obj;
            try {
                obj = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw Error("malformed JSON record (line " + std::to_string(lineno) +
                            "): " + e.what());
            }
            if (!obj.is_object())
                throw Error("record is not an object (line " + std::to_string(lineno) + ")");
            for (const auto& [key, _] : obj.items()) {
                if (key != "id" && key != "text" && key != "label" && key != "dataset")
                    throw Error("unknown key \"" + key + "\" (line " + std::to_string(lineno) + ")");
            }
            for (const char* key : {"id", "text", "label", "dataset"}) {
                if (!obj.contains(key) || !obj[key].is_string())
                    throw Error(std::string("missing or non-string key \"") + key +
                                "\" (line " + std::to_string(lineno) + ")");
            }
            LabeledDocument doc;
            doc.id = obj["id"].get<std::string>();
            doc.text = obj["text"].get<std::string>();
            try {
                doc.label = label_from_string(obj["label"].get<std::string>());
            } catch (const Error& e) {
                throw Error(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
            }
            doc.dataset = obj["dataset"].get<std::string>();
            detail::validate_doc(doc, lineno, seen_ids);
            corpus.docs.push_back(std::move(doc));
        }
    } else {
        detail::CsvReader reader(in);
        std::vector<std::string> fields;
        std::size_t lineno = 0;
        if (!reader.next(fields, lineno))
            throw Error("empty CSV file: " + path);
        if (fields != std::vector<std::string>{"id", "text", "label", "dataset"})
            throw Error("bad CSV header (line " + std::to_string(lineno) +
                        "): expected id,text,label,dataset");
        while (reader.next(fields, lineno)) {
            if (fields.size() == 1 && fields[0].empty()) continue; // trailing newline
            if (fields.size() != 4)
                throw Error("expected 4 fields, got " + std::to_string(fields.size()) +
                            " (line " + std::to_string(lineno) + ")");
            LabeledDocument doc;
            doc.id = fields[0];
            doc.text = fields[1];
            try {
                doc.label = label_from_string(fields[2]);
            } catch (const Error& e) {
                throw Error(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
            }
            doc.dataset = fields[3];
            detail::validate_doc(doc, lineno, seen_ids);
            corpus.docs.push_back(std::move(doc));
        }
    }
    return corpus;
}

inline void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write corpus file: " + path);
    if (format == CorpusFormat::Jsonl) {
        for (const auto& doc : corpus.docs) {
            nlohmann::json obj{{"id", doc.id},
                               {"text", doc.text},
                               {"label", to_string(doc.label)},
                               {"dataset", doc.dataset}};
            out << obj.dump() << "\n";
        }
    } else {
        out << "id,text,label,dataset\n";
        for (const auto& doc : corpus.docs) {
            out << detail::csv_quote(doc.id) << ',' << detail::csv_quote(doc.text) << ','
                << to_string(doc.label) << ',' << detail::csv_quote(doc.dataset) << "\n";
        }
    }
    if (!out) throw Error("write failed: " + path);
}

struct SplitRatios {
    double train = 0.7;
    double val = 0.2;
    double test = 0.1;
};

struct SplitBundle {
    Corpus train;
    Corpus val;
    Corpus test;
    std::uint64_t seed = 0;
};

// Deterministic stratified split.  Strata are (label, dataset) groups.
// Sizing: global part sizes come from largest-remainder rounding of the
// whole corpus (remainder priority train, val, test); within each stratum
// parts get floor(stratum * ratio) documents, and the stratum's leftover
// documents go to parts that still trail their global target, preferring
// the part with the largest fractional remainder.  Every stratum therefore
// stays within one document of its ideal share while the global sizes hit
// the rounded targets exactly.  Document membership is drawn by a seeded
// Fisher-Yates shuffle per stratum; each part keeps original corpus order.
inline SplitBundle stratified_split(const Corpus& corpus, SplitRatios ratios,
                                    std::uint64_t seed) {
    constexpr int kParts = 3;
    const std::array<double, kParts> r{ratios.train, ratios.val, ratios.test};
    for (double x : r)
        if (!(x > 0.0)) throw Error("split ratios must be positive");
    if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9)
        throw Error("split ratios must sum to 1");
    if (corpus.empty()) throw Error("cannot split an empty corpus");

    // Strata in deterministic key order.
    std::map<std::pair<int, std::string>, std::vector<std::size_t>> strata;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
        const auto& d = corpus.docs[i];
        strata[{static_cast<int>(d.label), d.dataset}].push_back(i);
    }
    for (const auto& [key, members] : strata) {
        if (members.size() < kParts)
            throw Error("stratum (" + std::string(to_string(static_cast<Label>(key.first))) +
                        ", " + key.second + ") has " + std::to_string(members.size()) +
                        " documents but every part requires at least one");
    }

    const double n = static_cast<double>(corpus.size());
    // Global targets by largest remainder; ties favor train, then val, then test.
    std::array<std::size_t, kParts> global{};
    {
        std::array<double, kParts> frac{};
        std::size_t assigned = 0;
        for (int p = 0; p < kParts; ++p) {
            double ideal = n * r[p];
            global[p] = static_cast<std::size_t>(std::floor(ideal));
            frac[p] = ideal - std::floor(ideal);
            assigned += global[p];
        }
        std::array<int, kParts> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return frac[a] > frac[b]; });
        for (std::size_t i = assigned; i < corpus.size(); ++i)
            ++global[order[(i - assigned) % kParts]];
    }

    std::array<long long, kParts> deficit{};
    std::vector<std::array<std::size_t, kParts>> quota(strata.size());
    std::vector<std::array<double, kParts>> remainder(strata.size());
    {
        std::array<std::size_t, kParts> floor_total{};
        std::size_t s = 0;
        for (const auto& [key, members] : strata) {
            const double m = static_cast<double>(members.size());
            for (int p = 0; p < kParts; ++p) {
                double ideal = m * r[p];
                quota[s][p] = static_cast<std::size_t>(std::floor(ideal));
                remainder[s][p] = ideal - std::floor(ideal);
                floor_total[p] += quota[s][p];
            }
            ++s;
        }
        for (int p = 0; p < kParts; ++p)
            deficit[p] = static_cast<long long>(global[p]) -
                         static_cast<long long>(floor_total[p]);
    }

    // Hand leftover documents to parts that trail their global target.
    // Gale-Ryser style: satisfy the part with the largest outstanding
    // deficit first, drawing one document from each of the strata with the
    // most leftovers (ties by fractional remainder, then stratum order).
    // Each stratum grants a part at most one extra document, so every
    // stratum stays within one document of its ideal per-part share.
    {
        std::vector<std::size_t> leftover(strata.size());
        for (std::size_t s = 0; s < strata.size(); ++s) {
            std::size_t floors = quota[s][0] + quota[s][1] + quota[s][2];
            auto it = strata.begin();
            std::advance(it, static_cast<long>(s));
            leftover[s] = it->second.size() - floors;
        }
        std::vector<std::array<bool, kParts>> granted(strata.size());
        while (true) {
            int part = -1;
            for (int p = 0; p < kParts; ++p)
                if (deficit[p] > 0 && (part < 0 || deficit[p] > deficit[part])) part = p;
            if (part < 0) break;
            std::vector<std::size_t> candidates;
            for (std::size_t s = 0; s < strata.size(); ++s)
                if (leftover[s] > 0 && !granted[s][part]) candidates.push_back(s);
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](std::size_t a, std::size_t b) {
                                 if (leftover[a] != leftover[b]) return leftover[a] > leftover[b];
                                 return remainder[a][part] > remainder[b][part];
                             });
            if (candidates.size() > static_cast<std::size_t>(deficit[part]))
                candidates.resize(static_cast<std::size_t>(deficit[part]));
            for (std::size_t s : candidates) {
                ++quota[s][part];
                granted[s][part] = true;
                --leftover[s];
                --deficit[part];
            }
            if (deficit[part] > 0) {
                // Margins are always feasible for floor/ceil quotas; this
                // branch only guards against arithmetic surprises.
                for (std::size_t s = 0; s < strata.size() && deficit[part] > 0; ++s)
                    if (leftover[s] > 0) {
                        ++quota[s][part];
                        --leftover[s];
                        --deficit[part];
                    }
            }
        }
    }

    // Draw memberships.
    Rng rng(seed);
    std::vector<std::vector<std::size_t>> part_indices(kParts);
    {
        std::size_t s = 0;
        for (const auto& [key, members] : strata) {
            std::vector<std::size_t> pool = members;
            rng.shuffle(pool);
            std::size_t offset = 0;
            for (int p = 0; p < kParts; ++p) {
                for (std::size_t k = 0; k < quota[s][p]; ++k)
                    part_indices[p].push_back(pool[offset + k]);
                offset += quota[s][p];
            }
            ++s;
        }
    }

    SplitBundle bundle;
    bundle.seed = seed;
    Corpus* parts[kParts] = {&bundle.train, &bundle.val, &bundle.test};
    const char* suffix[kParts] = {".train", ".val", ".test"};
    for (int p = 0; p < kParts; ++p) {
        std::sort(part_indices[p].begin(), part_indices[p].end());
        parts[p]->name = corpus.name + suffix[p];
        parts[p]->docs.reserve(part_indices[p].size());
        for (std::size_t i : part_indices[p]) parts[p]->docs.push_back(corpus.docs[i]);
    }
    return bundle;
}

// Convenience partition by label, preserving order.
inline std::pair<Corpus, Corpus> partition_by_label(const Corpus& corpus) {
    Corpus human, machine;
    human.name = corpus.name + ".human";
    machine.name = corpus.name + ".machine";
    for (const auto& doc : corpus.docs)
        (doc.label == Label::Human ? human : machine).docs.push_back(doc);
    return {std::move(human), std::move(machine)};
}

} // namespace mgtd

#endif
