#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "extremis/analytics.hpp"

namespace extremis {

using StopwordSet = std::unordered_set<std::string>;

// One token per line, `#` comments allowed.
StopwordSet load_stopwords(const std::string& path);

// Token frequency table; holds no stopwords and no empty tokens.
struct FreqTable {
    std::map<std::string, std::int64_t> counts;
    std::int64_t total = 0;
};

// Removes every punctuation character (no space inserted: "don't" ->
// "dont"), splits on whitespace, drops stopwords and empty tokens.
std::vector<std::string> clean_tokens(const std::string& clean_text,
                                      const StopwordSet& stopwords);

FreqTable count_tokens(const std::vector<std::string>& tokens);

// Frequency table over the clean tokens of the top `n` items by the
// selector. An all-stopword corpus yields the empty table (total 0).
FreqTable build_corpus(const std::vector<ScoredSubmission>& items, Selector sel,
                       std::size_t n, const StopwordSet& stopwords);

// |keys(A) & keys(B)| / |keys(A) | keys(B)| over unique tokens; defined
// as 0 when both are empty.
double jaccard(const FreqTable& a, const FreqTable& b);

// Pairwise Jaccard over named tables; throws ContractError on duplicate
// names or fewer than 2 tables.
std::vector<std::vector<double>> jaccard_matrix(
    const std::vector<std::pair<std::string, FreqTable>>& tables);

// Top-k tokens by count descending, ties by token ascending.
std::vector<std::pair<std::string, std::int64_t>> export_frequencies(
    const FreqTable& table, std::size_t k);

}  // namespace extremis
