#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extremis/extremism.hpp"
#include "extremis/submission.hpp"

namespace extremis {

// Run configuration: a key-value text file (`key = value`, `#`
// comments) plus flag-level overrides. Flair allow-lists use
// `flair.<subreddit> = Flair A | Flair B`.
struct RunConfig {
    std::string store_path = "store.jsonl";
    std::string out_dir = "out";
    std::optional<std::string> fixture_dir;

    std::vector<std::string> subreddits;
    int top_limit = 50;
    FlairPolicy flair_policy;

    std::string valence_lexicon = "data/valence_lexicon.tsv";
    std::string pattern_lexicon = "data/pattern_lexicon.csv";
    std::string boosters = "data/boosters.txt";
    std::string negators = "data/negators.txt";
    std::string stopwords = "data/stopwords_en.txt";
    std::string events = "data/events/israel_palestine_2023.csv";

    // "e" or a positive number; any base only rescales chi_l.
    std::string log_base = "e";
    MeansScope means_scope = MeansScope::corpus;
    std::vector<std::string> selectors = {"chi_lu"};
    std::vector<std::string> cohorts = {"idf", "hamas"};
    std::size_t ma_window = 7;
    bool invert_subjectivity = false;
    bool count_posts_only = false;
    std::size_t top_n_hist = 100;
    std::size_t corpus_top_n = 1000;
    std::size_t freq_k = 100;
    std::size_t histogram_bins = 20;
    unsigned threads = 0;

    // 0 means natural log.
    double log_base_value() const;

    // Merges `path` onto the defaults; unknown keys are an error.
    static RunConfig load(const std::string& path);

    // Lexicon et al. must exist before scoring; throws on violation.
    void validate_files() const;
    void validate() const;
};

}  // namespace extremis
