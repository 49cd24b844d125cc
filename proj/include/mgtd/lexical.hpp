#ifndef MGTD_LEXICAL_HPP
#define MGTD_LEXICAL_HPP

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mgtd/corpus.hpp"
#include "mgtd/error.hpp"
#include "mgtd/porter.hpp"

namespace mgtd {

enum class TokenKind { Word, Number, Punctuation };

struct Token {
    std::string surface;
    TokenKind kind = TokenKind::Word;
    std::size_t begin = 0; // byte offsets into the source text
    std::size_t end = 0;

    bool operator==(const Token&) const = default;
};

// Inclusive token-index range of one sentence.
struct SentenceSpan {
    std::size_t first = 0;
    std::size_t last = 0;

    bool operator==(const SentenceSpan&) const = default;
};

struct VocabStats {
    std::size_t vocab_size = 0; // distinct lowercased word/number surfaces
    std::size_t stem_count = 0; // distinct Porter stems of word tokens
    double avg_sentences_per_doc = 0.0;
    double avg_sentence_length = 0.0; // tokens per sentence, punctuation included
};

namespace detail {

inline bool ascii_alpha(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }
inline bool ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Byte length of the UTF-8 sequence starting at `c` (1 for malformed bytes,
// so the scanner always advances).
inline std::size_t utf8_len(unsigned char c) {
    if (c < 0x80) return 1;
    if ((c & 0xE0) == 0xC0) return 2;
    if ((c & 0xF0) == 0xE0) return 3;
    if ((c & 0xF8) == 0xF0) return 4;
    return 1;
}

} // namespace detail

// Rule-based tokenizer: maximal ASCII-letter runs become words, maximal
// digit runs with at most one internal decimal point become numbers, and
// every other non-whitespace symbol (one code point) becomes punctuation.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (detail::ascii_space(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (detail::ascii_alpha(c)) {
            while (i < n && detail::ascii_alpha(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({std::string(text.substr(start, i - start)), TokenKind::Word,
                              start, i});
        } else if (detail::ascii_digit(c)) {
            bool seen_point = false;
            while (i < n) {
                unsigned char d = static_cast<unsigned char>(text[i]);
                if (detail::ascii_digit(d)) {
                    ++i;
                } else if (d == '.' && !seen_point && i + 1 < n &&
                           detail::ascii_digit(static_cast<unsigned char>(text[i + 1]))) {
                    seen_point = true;
                    i += 2; // point plus the digit that licensed it
                } else {
                    break;
                }
            }
            tokens.push_back({std::string(text.substr(start, i - start)), TokenKind::Number,
                              start, i});
        } else {
            std::size_t len = detail::utf8_len(c);
            if (start + len > n) len = 1;
            i = start + len;
            tokens.push_back({std::string(text.substr(start, len)), TokenKind::Punctuation,
                              start, i});
        }
    }
    return tokens;
}

// Abbreviations whose trailing period does not end a sentence.  Fixed so
// segmentation is reproducible.
inline const std::set<std::string>& sentence_abbreviations() {
    static const std::set<std::string> abbrevs{"dr", "mr",  "mrs", "ms", "vs",
                                               "e.g", "i.e", "fig", "no"};
    return abbrevs;
}

inline std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// Sentence boundaries fall after ".", "!" or "?".  A period is suppressed
// when it directly follows a single-letter word, a number token, or a word
// on the abbreviation list (decimal and abbreviation guard).  Trailing
// tokens always form a final sentence.
inline std::vector<SentenceSpan> split_sentences(const std::vector<Token>& tokens) {
    std::vector<SentenceSpan> spans;
    if (tokens.empty()) return spans;
    std::size_t first = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        if (tok.kind != TokenKind::Punctuation) continue;
        bool boundary = false;
        if (tok.surface == "!" || tok.surface == "?") {
            boundary = true;
        } else if (tok.surface == ".") {
            boundary = true;
            if (i > 0) {
                const Token& prev = tokens[i - 1];
                if (prev.kind == TokenKind::Number) boundary = false;
                else if (prev.kind == TokenKind::Word) {
                    std::string low = lowercase(prev.surface);
                    if (low.size() == 1 || sentence_abbreviations().count(low)) boundary = false;
                }
            }
        }
        if (boundary) {
            spans.push_back({first, i});
            first = i + 1;
        }
    }
    if (first < tokens.size()) spans.push_back({first, tokens.size() - 1});
    return spans;
}

// Corpus-level vocabulary and sentence statistics.  Vocabulary pools
// lowercased word and number surfaces; stems cover word tokens only.
// The two averages are computed per document, then averaged unweighted.
inline VocabStats vocab_stats(const Corpus& corpus) {
    if (corpus.empty()) throw Error("vocab_stats: empty corpus");
    std::unordered_set<std::string> vocab;
    std::unordered_set<std::string> stems;
    double sentence_sum = 0.0;
    double length_sum = 0.0;
    for (const auto& doc : corpus.docs) {
        auto tokens = tokenize(doc.text);
        auto sentences = split_sentences(tokens);
        for (const auto& tok : tokens) {
            if (tok.kind == TokenKind::Punctuation) continue;
            std::string low = lowercase(tok.surface);
            if (tok.kind == TokenKind::Word) stems.insert(porter_stem(low));
            vocab.insert(std::move(low));
        }
        sentence_sum += static_cast<double>(sentences.size());
        if (!sentences.empty()) {
            double total = 0.0;
            for (const auto& s : sentences)
                total += static_cast<double>(s.last - s.first + 1);
            length_sum += total / static_cast<double>(sentences.size());
        }
    }
    VocabStats stats;
    stats.vocab_size = vocab.size();
    stats.stem_count = stems.size();
    const double d = static_cast<double>(corpus.size());
    stats.avg_sentences_per_doc = sentence_sum / d;
    stats.avg_sentence_length = length_sum / d;
    return stats;
}

} // namespace mgtd

#endif
