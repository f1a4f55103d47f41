#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "extremis/errors.hpp"
#include "extremis/pattern.hpp"
#include "extremis/submission.hpp"
#include "extremis/valence.hpp"

namespace extremis {

struct SentimentScores {
    double a = 0.0;  // anger, [0, 1]
    double p = 0.0;  // polarity, [-1, 1]
    double s = 0.0;  // subjectivity, [0, 1]
};

// Corpus-level means used for normalization; all strictly positive on a
// non-degenerate corpus.
struct CorpusMeans {
    double mean_a = 0.0;
    double mean_abs_p = 0.0;
    double mean_s = 0.0;

    double product() const { return mean_a * mean_abs_p * mean_s; }
};

// A submission joined with every score stage.
struct ScoredSubmission {
    Submission submission;
    SentimentScores scores;
    std::size_t length = 0;    // word count L of the clean text
    std::int64_t upvotes = 0;  // u in the upvote weighting
    std::int64_t n = 1;        // comments on the owning post, floored at 1
    double chi = 0.0;
    double chi_norm = 0.0;
    double chi_l = 0.0;
    double chi_lu = 0.0;
    bool excluded = false;  // tombstone; not part of corpus means
};

// chi = a * |p| * s
double raw_extremism(const SentimentScores& sc);

// Arithmetic means of a, |p|, s. Throws EmptyCorpusError /
// DegenerateCorpusError (naming the zero component).
CorpusMeans corpus_means(const std::vector<SentimentScores>& scores);

// chi / (mean_a * mean_|p| * mean_s)
double normalize(double chi, const CorpusMeans& means);

// chi_norm / log(L + 1); L = 0 marks a tombstone and yields 0. The log
// base is configurable (any base preserves rankings); natural log is the
// default.
double weight_length(double chi_norm, std::size_t length, double log_base = 0.0);

// chi_l * max(0, 1 + u/n); the factor floors at zero so heavily
// downvoted items cannot go negative.
double weight_upvotes(double chi_l, std::int64_t upvotes, std::int64_t n);

enum class MeansScope { corpus, per_subreddit };

struct ScoreOptions {
    MeansScope scope = MeansScope::corpus;
    // Validation mode stops at chi_l: no engagement metrics.
    bool validation_mode = false;
    // 0 = hardware concurrency.
    unsigned threads = 0;
    // 0 = natural log.
    double log_base = 0.0;
};

// Per-item sentiment pass: preprocess, valence, pattern. Returns the
// scores plus tombstone flag and word count.
struct SentimentResult {
    SentimentScores scores;
    std::size_t length = 0;
    bool tombstone = false;
};
SentimentResult sentiment_pass(const Submission& sub, const ValenceEngine& valence,
                               const PatternEngine& pattern);

// Full per-submission staging once means are known. `n` is the
// comments-on-post count resolved by the caller (parent post's for
// comments), floored at 1.
ScoredSubmission score_submission(const Submission& sub, const CorpusMeans& means,
                                  const ValenceEngine& valence,
                                  const PatternEngine& pattern, std::int64_t n,
                                  const ScoreOptions& opts = {});

struct ScoreCorpusResult {
    std::vector<ScoredSubmission> items;  // input order
    CorpusMeans means;                    // corpus-scope means
    // Populated when scope == per_subreddit.
    std::map<std::string, CorpusMeans> subreddit_means;
};

// Two-pass pipeline: parallel sentiment map, sequential means reduction
// (so results never depend on thread scheduling), parallel staging map.
ScoreCorpusResult score_corpus(const SubmissionSet& set, const ValenceEngine& valence,
                               const PatternEngine& pattern,
                               const ScoreOptions& opts = {});

}  // namespace extremis
