#include <doctest.h>

#include <cmath>

#include "extremis/textstats.hpp"

using namespace extremis;
using doctest::Approx;

namespace {

ScoredSubmission scored_text(const std::string& id, const std::string& text,
                             double chi_lu) {
    ScoredSubmission it;
    it.submission.id = id;
    it.submission.kind = Kind::post;
    it.submission.post_id = id;
    it.submission.subreddit = "sub";
    it.submission.text = text;
    it.chi_lu = chi_lu;
    return it;
}

FreqTable table_of(std::initializer_list<std::pair<const char*, std::int64_t>> init) {
    FreqTable t;
    for (const auto& [tok, count] : init) {
        t.counts[tok] = count;
        t.total += count;
    }
    return t;
}

}  // namespace

TEST_CASE("clean_tokens strips punctuation and stopwords") {
    CHECK(clean_tokens("war, war!!", {}) == std::vector<std::string>{"war", "war"});
    CHECK(clean_tokens("the war", {"the"}) == std::vector<std::string>{"war"});
    CHECK(clean_tokens("", {}).empty());
    // Punctuation removal merges, never splits.
    CHECK(clean_tokens("don't", {}) == std::vector<std::string>{"dont"});
    CHECK(clean_tokens("hamas-led", {}) == std::vector<std::string>{"hamasled"});
    // Punctuation-only tokens vanish.
    CHECK(clean_tokens("... --- !!!", {}).empty());
}

TEST_CASE("clean_tokens output carries no punctuation and no stopwords") {
    StopwordSet stop = {"the", "a", "of"};
    auto toks = clean_tokens("the \"war\" of a don't-care world!!", stop);
    for (const auto& t : toks) {
        CHECK_FALSE(stop.count(t));
        for (char c : t)
            CHECK_FALSE(is_ascii_punct(static_cast<unsigned char>(c)));
    }
}

TEST_CASE("build_corpus concatenates clean tokens of the top items") {
    std::vector<ScoredSubmission> items = {scored_text("x", "a b", 2.0),
                                           scored_text("y", "b", 1.0)};
    FreqTable t = build_corpus(items, Selector::chi_lu, 10, {});
    CHECK(t.total == 3);
    CHECK(t.counts.at("a") == 1);
    CHECK(t.counts.at("b") == 2);

    // n = 1 keeps only the single top item.
    t = build_corpus(items, Selector::chi_lu, 1, {});
    CHECK(t.total == 2);
    CHECK(t.counts.count("a") == 1);
    CHECK(t.counts.count("b") == 1);

    // Degenerate: every token a stopword -> empty table, total 0.
    t = build_corpus({scored_text("z", "the the", 1.0)}, Selector::chi_lu, 5, {"the"});
    CHECK(t.total == 0);
    CHECK(t.counts.empty());
}

TEST_CASE("build_corpus total equals the sum of per-item token counts") {
    StopwordSet stop = {"the"};
    std::vector<ScoredSubmission> items = {
        scored_text("a", "the war rages on", 3.0),
        scored_text("b", "peace talks, resumed!", 2.0),
        scored_text("c", "the the the", 1.0)};
    FreqTable t = build_corpus(items, Selector::chi_lu, 10, stop);
    std::int64_t expected = 0;
    for (const auto& it : items)
        expected += static_cast<std::int64_t>(
            clean_tokens(it.submission.text, stop).size());
    CHECK(t.total == expected);
}

TEST_CASE("jaccard over unique token sets") {
    FreqTable ab = table_of({{"a", 3}, {"b", 1}});
    FreqTable bc = table_of({{"b", 7}, {"c", 2}});
    FreqTable empty;

    CHECK(jaccard(ab, ab) == Approx(1.0));
    CHECK(jaccard(ab, bc) == Approx(1.0 / 3.0));
    CHECK(jaccard(bc, ab) == Approx(1.0 / 3.0));
    CHECK(jaccard(ab, table_of({{"x", 1}})) == 0.0);
    CHECK(jaccard(empty, empty) == 0.0);
    CHECK(jaccard(ab, empty) == 0.0);
}

TEST_CASE("jaccard matrix is symmetric and validates names") {
    std::vector<std::pair<std::string, FreqTable>> tables = {
        {"one", table_of({{"a", 1}, {"b", 1}})},
        {"two", table_of({{"b", 1}, {"c", 1}})},
        {"three", table_of({{"a", 1}, {"c", 1}, {"d", 1}})}};
    auto m = jaccard_matrix(tables);
    for (size_t i = 0; i < tables.size(); ++i) {
        CHECK(m[i][i] == 1.0);
        for (size_t j = 0; j < tables.size(); ++j) {
            CHECK(m[i][j] == m[j][i]);
            CHECK(m[i][j] ==
                  Approx(jaccard(tables[i].second, tables[j].second)));
        }
    }
    // Hand checks over pairs.
    CHECK(m[0][1] == Approx(1.0 / 3.0));
    CHECK(m[0][2] == Approx(0.25));
    CHECK(m[1][2] == Approx(0.25));

    tables.emplace_back("one", FreqTable{});
    CHECK_THROWS_AS(jaccard_matrix(tables), ContractError);
    CHECK_THROWS_AS(
        jaccard_matrix({{"solo", table_of({{"a", 1}})}}), ContractError);
}

TEST_CASE("export_frequencies ranks by count then token") {
    FreqTable t = table_of({{"a", 3}, {"b", 1}});
    auto ranked = export_frequencies(t, 1);
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].first == "a");
    CHECK(ranked[0].second == 3);

    t = table_of({{"b", 2}, {"a", 2}});
    ranked = export_frequencies(t, 2);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].first == "a");  // lexicographic tie-break
    CHECK(ranked[1].first == "b");

    ranked = export_frequencies(t, 99);
    CHECK(ranked.size() == 2);
}
