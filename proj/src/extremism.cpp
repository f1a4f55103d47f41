#include "extremis/extremism.hpp"

#include <cmath>
#include <unordered_map>

#include "extremis/parallel.hpp"

namespace extremis {

double raw_extremism(const SentimentScores& sc) {
    return sc.a * std::fabs(sc.p) * sc.s;
}

CorpusMeans corpus_means(const std::vector<SentimentScores>& scores) {
    if (scores.empty()) throw EmptyCorpusError();
    CorpusMeans m;
    for (const auto& sc : scores) {
        m.mean_a += sc.a;
        m.mean_abs_p += std::fabs(sc.p);
        m.mean_s += sc.s;
    }
    const double n = static_cast<double>(scores.size());
    m.mean_a /= n;
    m.mean_abs_p /= n;
    m.mean_s /= n;
    if (m.mean_a == 0.0) throw DegenerateCorpusError("anger");
    if (m.mean_abs_p == 0.0) throw DegenerateCorpusError("absolute polarity");
    if (m.mean_s == 0.0) throw DegenerateCorpusError("subjectivity");
    return m;
}

double normalize(double chi, const CorpusMeans& means) {
    return chi / means.product();
}

double weight_length(double chi_norm, std::size_t length, double log_base) {
    if (length == 0) return 0.0;  // tombstone
    double denom = std::log(static_cast<double>(length) + 1.0);
    if (log_base > 0.0) denom /= std::log(log_base);
    return chi_norm / denom;
}

double weight_upvotes(double chi_l, std::int64_t upvotes, std::int64_t n) {
    if (n < 1) n = 1;
    double factor = 1.0 + static_cast<double>(upvotes) / static_cast<double>(n);
    if (factor < 0.0) factor = 0.0;
    return chi_l * factor;
}

SentimentResult sentiment_pass(const Submission& sub, const ValenceEngine& valence,
                               const PatternEngine& pattern) {
    SentimentResult r;
    CleanText clean = preprocess(sub.text);
    if (clean.tombstone) {
        r.tombstone = true;
        return r;
    }
    r.length = word_count(clean.text);
    ValenceScores v = valence.score(sub.raw_or_text());
    PatternScores p = pattern.score(clean.text);
    r.scores.a = anger(v);
    r.scores.p = p.polarity;
    r.scores.s = p.subjectivity;
    return r;
}

namespace {

ScoredSubmission stage_scores(const Submission& sub, const SentimentResult& sr,
                              const CorpusMeans& means, std::int64_t n,
                              const ScoreOptions& opts) {
    ScoredSubmission out;
    out.submission = sub;
    out.upvotes = sub.upvotes;
    out.n = n < 1 ? 1 : n;
    if (sr.tombstone) {
        out.excluded = true;
        return out;
    }
    out.scores = sr.scores;
    out.length = sr.length;
    out.chi = raw_extremism(sr.scores);
    out.chi_norm = normalize(out.chi, means);
    out.chi_l = weight_length(out.chi_norm, sr.length, opts.log_base);
    out.chi_lu = opts.validation_mode
                     ? out.chi_l
                     : weight_upvotes(out.chi_l, out.upvotes, out.n);
    return out;
}

std::int64_t resolve_n(const Submission& sub,
                       const std::unordered_map<std::string, std::int64_t>& post_n) {
    auto it = post_n.find(sub.post_id);
    std::int64_t n = 1;
    if (it != post_n.end()) n = it->second;
    if (sub.is_post() && sub.n_comments) n = *sub.n_comments;
    return n < 1 ? 1 : n;
}

}  // namespace

ScoredSubmission score_submission(const Submission& sub, const CorpusMeans& means,
                                  const ValenceEngine& valence,
                                  const PatternEngine& pattern, std::int64_t n,
                                  const ScoreOptions& opts) {
    return stage_scores(sub, sentiment_pass(sub, valence, pattern), means, n, opts);
}

ScoreCorpusResult score_corpus(const SubmissionSet& set, const ValenceEngine& valence,
                               const PatternEngine& pattern, const ScoreOptions& opts) {
    ScoreCorpusResult result;
    const size_t n_items = set.size();

    // Pass 1: per-item sentiment, embarrassingly parallel.
    std::vector<SentimentResult> sentiments(n_items);
    parallel_for(n_items, opts.threads, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            sentiments[i] = sentiment_pass(set[i], valence, pattern);
    });

    // Means reduction stays sequential and index-ordered: bit-identical
    // results for any thread count.
    std::vector<SentimentScores> population;
    population.reserve(n_items);
    for (size_t i = 0; i < n_items; ++i)
        if (!sentiments[i].tombstone) population.push_back(sentiments[i].scores);
    result.means = corpus_means(population);

    std::map<std::string, CorpusMeans> sub_means;
    if (opts.scope == MeansScope::per_subreddit) {
        std::map<std::string, std::vector<SentimentScores>> by_sub;
        for (size_t i = 0; i < n_items; ++i)
            if (!sentiments[i].tombstone)
                by_sub[set[i].subreddit].push_back(sentiments[i].scores);
        for (auto& [name, scores] : by_sub) {
            try {
                sub_means[name] = corpus_means(scores);
            } catch (const DegenerateCorpusError& e) {
                throw DegenerateCorpusError(e.component() + " (subreddit " + name + ")");
            }
        }
        result.subreddit_means = sub_means;
    }

    // Comments inherit n from their parent post.
    std::unordered_map<std::string, std::int64_t> post_n;
    for (const auto& s : set)
        if (s.is_post() && s.n_comments) post_n[s.id] = *s.n_comments;

    // Pass 2: staging map.
    result.items.resize(n_items);
    const CorpusMeans* corpus_scope_means = &result.means;
    parallel_for(n_items, opts.threads, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const Submission& sub = set[i];
            const CorpusMeans* m = corpus_scope_means;
            if (opts.scope == MeansScope::per_subreddit) {
                auto it = result.subreddit_means.find(sub.subreddit);
                if (it != result.subreddit_means.end()) m = &it->second;
            }
            result.items[i] = stage_scores(sub, sentiments[i], *m,
                                           resolve_n(sub, post_n), opts);
        }
    });

    return result;
}

}  // namespace extremis
