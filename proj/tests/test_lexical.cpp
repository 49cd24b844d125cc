#include <catch2/catch_amalgamated.hpp>

#include "mgtd/lexical.hpp"

using namespace mgtd;

namespace {

Corpus single_doc(const std::string& text) {
    Corpus c;
    c.name = "one";
    c.docs.push_back({"d0", text, Label::Human, "t"});
    return c;
}

} // namespace

TEST_CASE("tokenize basic segmentation") {
    auto toks = tokenize("3.5 cm mass.");
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].surface == "3.5");
    CHECK(toks[0].kind == TokenKind::Number);
    CHECK(toks[1].surface == "cm");
    CHECK(toks[1].kind == TokenKind::Word);
    CHECK(toks[2].surface == "mass");
    CHECK(toks[3].surface == ".");
    CHECK(toks[3].kind == TokenKind::Punctuation);
}

TEST_CASE("tokenize empty and symbol-splitting cases") {
    CHECK(tokenize("").empty());
    auto toks = tokenize("CT-guided");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].surface == "CT");
    CHECK(toks[1].surface == "-");
    CHECK(toks[1].kind == TokenKind::Punctuation);
    CHECK(toks[2].surface == "guided");
}

TEST_CASE("tokenize number edge cases") {
    auto toks = tokenize("12. 1.2.3 7");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0].surface == "12");   // trailing period is punctuation
    CHECK(toks[1].surface == ".");
    CHECK(toks[2].surface == "1.2");  // only one internal decimal point
    CHECK(toks[3].surface == ".");
    CHECK(toks[4].surface == "3");
    CHECK(toks[5].surface == "7");
}

TEST_CASE("tokenize spans reconstruct the input") {
    const std::string text = "A 3.5 cm CT-guided biopsy; caf\xC3\xA9 rules!  OK?";
    auto toks = tokenize(text);
    std::size_t prev_end = 0;
    std::string rebuilt;
    for (const auto& t : toks) {
        REQUIRE(t.begin >= prev_end);
        for (std::size_t i = prev_end; i < t.begin; ++i)
            CHECK(detail::ascii_space(static_cast<unsigned char>(text[i])));
        CHECK(text.substr(t.begin, t.end - t.begin) == t.surface);
        rebuilt += text.substr(prev_end, t.end - prev_end);
        prev_end = t.end;
    }
    rebuilt += text.substr(prev_end);
    CHECK(rebuilt == text);
}

TEST_CASE("split_sentences basic boundaries") {
    auto toks = tokenize("It is benign. No change.");
    auto spans = split_sentences(toks);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].first == 0);
    CHECK(toks[spans[0].last].surface == ".");
    CHECK(spans[1].last == toks.size() - 1);
}

TEST_CASE("split_sentences abbreviation and decimal guards") {
    CHECK(split_sentences(tokenize("Dr. Smith agreed.")).size() == 1);
    CHECK(split_sentences(tokenize("See Fig. 3 for detail.")).size() == 1);
    // Number guard: the period after "3" does not end the sentence.
    CHECK(split_sentences(tokenize("Mass of 3. It grew.")).size() == 1);
    CHECK(split_sentences(tokenize("e.g. a cyst. Then more.")).size() == 2);
    CHECK(split_sentences(tokenize("")).empty());
}

TEST_CASE("split_sentences trailing tokens form a final sentence") {
    auto spans = split_sentences(tokenize("Stable disease. No new lesion"));
    REQUIRE(spans.size() == 2);
    CHECK(spans[1].first == 3);
}

TEST_CASE("sentence spans partition the token list") {
    auto toks = tokenize("One! Two? Three. 3.5 cm. Dr. Who");
    auto spans = split_sentences(toks);
    std::size_t next = 0;
    for (const auto& s : spans) {
        CHECK(s.first == next);
        CHECK(s.last >= s.first);
        next = s.last + 1;
    }
    CHECK(next == toks.size());
}

TEST_CASE("vocab_stats hand-worked example") {
    Corpus c = single_doc("The tumor measures 3 cm. It is benign.");
    VocabStats stats = vocab_stats(c);
    CHECK(stats.avg_sentences_per_doc == 2.0);
    CHECK(stats.avg_sentence_length == Catch::Approx(5.0));
    CHECK(stats.vocab_size == 8);  // the tumor measures 3 cm it is benign
    CHECK(stats.stem_count == 7);  // "measures" -> "measur"; 3 not stemmed
}

TEST_CASE("vocab_stats punctuation-only document") {
    Corpus c = single_doc(".");
    VocabStats stats = vocab_stats(c);
    CHECK(stats.vocab_size == 0);
    CHECK(stats.stem_count == 0);
    CHECK(stats.avg_sentences_per_doc == 1.0);
}

TEST_CASE("vocab_stats rejects empty corpus") {
    CHECK_THROWS_AS(vocab_stats(Corpus{}), Error);
}

TEST_CASE("stem count never exceeds word vocabulary") {
    Corpus c;
    c.name = "m";
    c.docs.push_back({"a", "Lesions lesion lesioned; measures measured measuring!",
                      Label::Human, "t"});
    c.docs.push_back({"b", "Running runs ran. The the THE.", Label::Human, "t"});
    VocabStats stats = vocab_stats(c);
    CHECK(stats.stem_count <= stats.vocab_size);
}
