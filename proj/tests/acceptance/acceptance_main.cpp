// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "extremis/analytics.hpp"
#include "extremis/commands.hpp"
#include "extremis/csv.hpp"
#include "extremis/extremism.hpp"
#include "extremis/sha256.hpp"
#include "extremis/store.hpp"
#include "extremis/textstats.hpp"
#include "../reference/reference_valence.hpp"

using namespace extremis;
namespace fs = std::filesystem;

namespace {

const std::string kSource = EXTREMIS_SOURCE_DIR;
const std::string kCli = EXTREMIS_CLI_PATH;

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%d] %-28s %s  %s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

ValenceEngine load_valence() {
    return ValenceEngine(ValenceLexicon::load(kSource + "/data/valence_lexicon.tsv",
                                              kSource + "/data/boosters.txt",
                                              kSource + "/data/negators.txt"));
}

PatternEngine load_pattern() {
    return PatternEngine(PatternLexicon::load(kSource + "/data/pattern_lexicon.csv",
                                              kSource + "/data/negators.txt"));
}

Submission synth_submission(const std::string& id, const std::string& text,
                            std::int64_t upvotes, std::int64_t n_comments) {
    Submission s;
    s.id = id;
    s.kind = Kind::post;
    s.post_id = id;
    s.subreddit = "synthetic";
    s.text = text;
    s.upvotes = upvotes;
    s.created_at = 1696636800;
    s.retrieved_at = 1696680000;
    s.n_comments = n_comments;
    return s;
}

std::string random_text(std::mt19937& rng, int target_tokens) {
    static const std::vector<std::string> pool = {
        "terrible", "war",      "peace",   "hope",    "evil",     "disgusting",
        "good",     "great",    "sad",     "tragic",  "brutal",   "wonderful",
        "not",      "very",     "really",  "slightly", "but",     "the",
        "a",        "report",   "people",  "region",  "today",    "again",
        "hamas",    "idf",      "city",    "family",  "news",     "massacre"};
    std::string text;
    for (int i = 0; i < target_tokens; ++i) {
        if (i) text += ' ';
        text += pool[rng() % pool.size()];
    }
    if (rng() % 4 == 0) text += "!";
    return text;
}

// ---------------------------------------------------------------------------
// 1. Formula oracle: pipeline vs a direct single-pass application of the
//    staging formulas (its own mean accumulation, its own math).
// ---------------------------------------------------------------------------
void criterion_formula_oracle(const ValenceEngine& valence,
                              const PatternEngine& pattern) {
    std::mt19937 rng(1001);
    SubmissionSet set;
    for (int i = 0; i < 100; ++i)
        set.push_back(synth_submission("synth" + std::to_string(i),
                                       random_text(rng, 4 + rng() % 20),
                                       static_cast<std::int64_t>(rng() % 200) - 20,
                                       1 + rng() % 50));

    auto start = std::chrono::steady_clock::now();
    ScoreCorpusResult result = score_corpus(set, valence, pattern, {});
    const double elapsed = seconds_since(start);

    // Brute force: sentiment per item, then direct formula staging.
    struct Raw {
        double a, p, s;
        bool dead;
        std::size_t len;
    };
    std::vector<Raw> raw;
    for (const auto& sub : set) {
        CleanText ct = preprocess(sub.text);
        Raw r{0, 0, 0, ct.tombstone, 0};
        if (!ct.tombstone) {
            r.a = valence.score(sub.raw_or_text()).neg;
            PatternScores ps = pattern.score(ct.text);
            r.p = ps.polarity;
            r.s = ps.subjectivity;
            r.len = word_count(ct.text);
        }
        raw.push_back(r);
    }
    double sum_a = 0, sum_p = 0, sum_s = 0;
    std::size_t alive = 0;
    for (const auto& r : raw) {
        if (r.dead) continue;
        sum_a += r.a;
        sum_p += std::fabs(r.p);
        sum_s += r.s;
        ++alive;
    }
    const double denom =
        (sum_a / alive) * (sum_p / alive) * (sum_s / alive);

    double max_err = 0;
    for (size_t i = 0; i < set.size(); ++i) {
        double chi = 0, chi_norm = 0, chi_l = 0, chi_lu = 0;
        if (!raw[i].dead) {
            chi = raw[i].a * std::fabs(raw[i].p) * raw[i].s;
            chi_norm = chi / denom;
            chi_l = raw[i].len == 0
                        ? 0.0
                        : chi_norm / std::log(static_cast<double>(raw[i].len) + 1.0);
            double factor = 1.0 + static_cast<double>(set[i].upvotes) /
                                      static_cast<double>(*set[i].n_comments < 1
                                                              ? 1
                                                              : *set[i].n_comments);
            if (factor < 0) factor = 0;
            chi_lu = chi_l * factor;
        }
        max_err = std::max(max_err, std::fabs(chi - result.items[i].chi));
        max_err = std::max(max_err, std::fabs(chi_norm - result.items[i].chi_norm));
        max_err = std::max(max_err, std::fabs(chi_l - result.items[i].chi_l));
        max_err = std::max(max_err, std::fabs(chi_lu - result.items[i].chi_lu));
    }

    char detail[160];
    std::snprintf(detail, sizeof(detail), "max |err| = %.3g, runtime %.3f s",
                  max_err, elapsed);
    report(1, "formula-oracle", max_err <= 1e-9 && elapsed < 1.0, detail);
}

// ---------------------------------------------------------------------------
// 2. Ranking invariance over 1,000 random corpora.
// ---------------------------------------------------------------------------
void criterion_ranking_invariance() {
    std::mt19937 rng(2002);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        std::vector<SentimentScores> scores;
        for (int i = 0; i < n; ++i)
            scores.push_back({unit(rng), unit(rng) * 2 - 1, unit(rng)});
        CorpusMeans means;
        try {
            means = corpus_means(scores);
        } catch (const std::exception&) {
            continue;
        }
        std::vector<double> chi, chi_norm;
        for (const auto& sc : scores) {
            chi.push_back(raw_extremism(sc));
            chi_norm.push_back(normalize(chi.back(), means));
        }
        std::vector<size_t> a(chi.size()), b(chi.size());
        std::iota(a.begin(), a.end(), 0);
        b = a;
        std::stable_sort(a.begin(), a.end(),
                         [&](size_t l, size_t r) { return chi[l] < chi[r]; });
        std::stable_sort(b.begin(), b.end(),
                         [&](size_t l, size_t r) { return chi_norm[l] < chi_norm[r]; });
        if (a != b) ++violations;
    }
    report(2, "ranking-invariance", violations == 0,
           std::to_string(violations) + " violations / 1000 corpora");
}

// ---------------------------------------------------------------------------
// 3. Monotonicity over 10,000 random tuples.
// ---------------------------------------------------------------------------
void criterion_monotonicity() {
    std::mt19937 rng(3003);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double chi_norm = unit(rng) * 50.0;
        const std::size_t L = 1 + rng() % 2000;
        const std::size_t L2 = L + 1 + rng() % 500;
        const std::int64_t u = static_cast<std::int64_t>(rng() % 5000) - 500;
        const std::int64_t u2 = u + 1 + static_cast<std::int64_t>(rng() % 500);
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000);
        if (weight_length(chi_norm, L) < weight_length(chi_norm, L2)) ++violations;
        const double chi_l = weight_length(chi_norm, L);
        if (weight_upvotes(chi_l, u, n) > weight_upvotes(chi_l, u2, n)) ++violations;
    }
    report(3, "monotonicity", violations == 0,
           std::to_string(violations) + " violations / 10000 tuples");
}

// ---------------------------------------------------------------------------
// 4. Valence engine vs the independent reference on the 200-sentence
//    fixture corpus.
// ---------------------------------------------------------------------------
void criterion_valence_reference(const ValenceEngine& engine) {
    refimpl::ReferenceValence reference(kSource + "/data/valence_lexicon.tsv",
                                        kSource + "/data/boosters.txt",
                                        kSource + "/data/negators.txt");
    std::ifstream in(kSource + "/fixtures/valence_200.txt");
    if (!in) {
        report(4, "valence-reference", false, "fixture corpus missing");
        return;
    }
    std::string line;
    int sentences = 0;
    double max_err = 0;
    while (std::getline(in, line)) {
        ++sentences;
        ValenceScores mine = engine.score(line);
        refimpl::Scores ref = reference.score(line);
        max_err = std::max(max_err, std::fabs(mine.neg - ref.neg));
        max_err = std::max(max_err, std::fabs(mine.neu - ref.neu));
        max_err = std::max(max_err, std::fabs(mine.pos - ref.pos));
        max_err = std::max(max_err, std::fabs(mine.compound - ref.compound));
    }
    // Single negative token: anger exactly 1.0.
    const double single = anger(engine.score("terrible"));
    const bool single_ok = single == 1.0;

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d sentences, max |err| = %.3g, single-token anger = %g",
                  sentences, max_err, single);
    report(4, "valence-reference", sentences == 200 && max_err <= 1e-4 && single_ok,
           detail);
}

// ---------------------------------------------------------------------------
// 5. Range fuzzing: 100,000 random UTF-8 strings.
// ---------------------------------------------------------------------------
void criterion_range_fuzzing(const ValenceEngine& valence,
                             const PatternEngine& pattern) {
    std::mt19937 rng(5005);
    auto start = std::chrono::steady_clock::now();
    int out_of_range = 0;

    auto random_utf8 = [&rng]() {
        std::string s;
        const int pieces = static_cast<int>(rng() % 40);
        for (int i = 0; i < pieces; ++i) {
            switch (rng() % 5) {
                case 0:  // ASCII word chars and punctuation
                    s += static_cast<char>(32 + rng() % 95);
                    break;
                case 1: {  // 2-byte sequence
                    s += static_cast<char>(0xC2 + rng() % 30);
                    s += static_cast<char>(0x80 + rng() % 64);
                    break;
                }
                case 2: {  // 3-byte sequence
                    s += static_cast<char>(0xE0 + rng() % 16);
                    s += static_cast<char>(0x80 + rng() % 64);
                    s += static_cast<char>(0x80 + rng() % 64);
                    break;
                }
                case 3:
                    s += ' ';
                    break;
                default: {  // lexicon-ish word
                    static const char* words[] = {"terrible", "not", "very",
                                                  "war", "peace", "but", "!!"};
                    s += words[rng() % 7];
                    break;
                }
            }
        }
        return s;
    };

    for (int i = 0; i < 100000; ++i) {
        const std::string s = random_utf8();
        ValenceScores v = valence.score(s);
        PatternScores p = pattern.score(preprocess(s).text);
        const double a = anger(v);
        if (!(a >= 0.0 && a <= 1.0) || !std::isfinite(a) ||
            !(p.polarity >= -1.0 && p.polarity <= 1.0) ||
            !std::isfinite(p.polarity) ||
            !(p.subjectivity >= 0.0 && p.subjectivity <= 1.0) ||
            !std::isfinite(p.subjectivity) ||
            !(v.compound >= -1.0 && v.compound <= 1.0) || !std::isfinite(v.compound))
            ++out_of_range;
    }
    const double elapsed = seconds_since(start);
    char detail[120];
    std::snprintf(detail, sizeof(detail),
                  "%d out-of-range / 100000 strings, runtime %.1f s", out_of_range,
                  elapsed);
    report(5, "range-fuzzing", out_of_range == 0 && elapsed < 60.0, detail);
}

// ---------------------------------------------------------------------------
// 6. Analytics against naive direct implementations.
// ---------------------------------------------------------------------------
void criterion_analytics_oracles() {
    std::mt19937 rng(6006);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    double max_err = 0;
    int exact_mismatches = 0;

    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 60);
        DailySeries series;
        std::vector<double> values;
        for (int i = 0; i < n; ++i) {
            const double v = unif(rng);
            series.push_back({static_cast<Day>(19000 + i * (1 + rng() % 3)), v});
            values.push_back(v);
        }

        // moving_average vs naive window scan.
        const std::size_t window = 1 + rng() % 10;
        DailySeries ma = moving_average(series, window);
        for (size_t i = 0; i < series.size(); ++i) {
            double sum = 0;
            size_t count = 0;
            for (size_t k = (i + 1 >= window ? i + 1 - window : 0); k <= i; ++k) {
                sum += series[k].value;
                ++count;
            }
            max_err = std::max(max_err, std::fabs(ma[i].value - sum / count));
        }

        // running_mean vs naive prefix mean.
        DailySeries rm = running_mean(series);
        for (size_t i = 0; i < series.size(); ++i) {
            double sum = 0;
            for (size_t k = 0; k <= i; ++k) sum += series[k].value;
            max_err = std::max(max_err, std::fabs(rm[i].value - sum / (i + 1)));
        }

        // describe vs naive order statistics.
        DescriptiveStats st = describe(values);
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
        double ss = 0;
        for (double v : sorted) ss += (v - mean) * (v - mean);
        auto naive_q = [&](double q) {
            const double h = q * (n - 1);
            const size_t lo = static_cast<size_t>(h);
            if (lo + 1 >= sorted.size()) return sorted.back();
            return sorted[lo] + (h - lo) * (sorted[lo + 1] - sorted[lo]);
        };
        max_err = std::max(max_err, std::fabs(st.mean - mean));
        max_err = std::max(max_err, std::fabs(st.stddev - std::sqrt(ss / (n - 1))));
        max_err = std::max(max_err, std::fabs(st.q25 - naive_q(0.25)));
        max_err = std::max(max_err, std::fabs(st.median - naive_q(0.5)));
        max_err = std::max(max_err, std::fabs(st.q75 - naive_q(0.75)));
        max_err = std::max(max_err, std::fabs(st.min - sorted.front()));
        max_err = std::max(max_err, std::fabs(st.max - sorted.back()));

        // pearson vs naive covariance ratio.
        std::vector<double> ys;
        for (int i = 0; i < n; ++i) ys.push_back(unif(rng));
        try {
            const double r = pearson(values, ys);
            double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
            double sxy = 0, sxx = 0, syy = 0;
            for (int i = 0; i < n; ++i) {
                sxy += (values[i] - mean) * (ys[i] - my);
                sxx += (values[i] - mean) * (values[i] - mean);
                syy += (ys[i] - my) * (ys[i] - my);
            }
            max_err = std::max(max_err, std::fabs(r - sxy / std::sqrt(sxx * syy)));
        } catch (const UndefinedCorrelationError&) {
        }

        // histogram vs naive bin scan.
        std::vector<double> edges;
        double e = -10.0;
        const int bins = 2 + static_cast<int>(rng() % 8);
        for (int i = 0; i <= bins; ++i) {
            edges.push_back(e);
            e += 0.5 + unif(rng) * 0.1 + 2.0;
        }
        Histogram h = histogram(values, edges);
        std::vector<std::size_t> naive(bins, 0);
        std::size_t overflow = 0;
        for (double v : values) {
            if (v < edges.front() || v > edges.back()) {
                ++overflow;
                continue;
            }
            if (v == edges.back()) {
                ++naive.back();
                continue;
            }
            for (int b = 0; b < bins; ++b)
                if (v >= edges[b] && v < edges[b + 1]) {
                    ++naive[b];
                    break;
                }
        }
        if (h.counts != naive || h.overflow != overflow) ++exact_mismatches;
    }

    // Jaccard matrix vs pairwise set arithmetic, exact.
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<std::string, FreqTable>> tables;
        const int t = 2 + static_cast<int>(rng() % 4);
        for (int k = 0; k < t; ++k) {
            FreqTable table;
            const int tokens = static_cast<int>(rng() % 12);
            for (int j = 0; j < tokens; ++j) {
                std::string tok = "tok" + std::to_string(rng() % 15);
                ++table.counts[tok];
                ++table.total;
            }
            tables.emplace_back("t" + std::to_string(k), table);
        }
        auto m = jaccard_matrix(tables);
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < t; ++j) {
                if (i == j) continue;
                std::size_t inter = 0;
                for (const auto& [tok, cnt] : tables[i].second.counts)
                    inter += tables[j].second.counts.count(tok);
                const std::size_t uni = tables[i].second.counts.size() +
                                        tables[j].second.counts.size() - inter;
                const double expect =
                    uni == 0 ? 0.0
                             : static_cast<double>(inter) / static_cast<double>(uni);
                if (m[i][j] != expect) ++exact_mismatches;
            }
        }
    }

    char detail[120];
    std::snprintf(detail, sizeof(detail), "max |err| = %.3g, exact mismatches = %d",
                  max_err, exact_mismatches);
    report(6, "analytics-oracles", max_err <= 1e-12 && exact_mismatches == 0, detail);
}

// ---------------------------------------------------------------------------
// 7. End-to-end determinism through the CLI binary.
// ---------------------------------------------------------------------------
void criterion_e2e_determinism() {
    const fs::path work =
        fs::temp_directory_path() / ("extremis_accept_" + std::to_string(::getpid()));
    fs::remove_all(work);
    fs::create_directories(work);

    const std::string cfg_path = (work / "run.conf").string();
    {
        std::ofstream cfg(cfg_path);
        cfg << "subreddits = worldnews, palestine\n"
            << "flair.worldnews = Israel/Palestine | Israel Megathread\n"
            << "valence_lexicon = " << kSource << "/data/valence_lexicon.tsv\n"
            << "pattern_lexicon = " << kSource << "/data/pattern_lexicon.csv\n"
            << "boosters = " << kSource << "/data/boosters.txt\n"
            << "negators = " << kSource << "/data/negators.txt\n"
            << "stopwords = " << kSource << "/data/stopwords_en.txt\n"
            << "events = " << kSource << "/data/events/israel_palestine_2023.csv\n";
    }

    auto run_pipeline = [&](const std::string& tag) -> bool {
        const fs::path dir = work / tag;
        fs::create_directories(dir);
        for (const char* verb : {"ingest", "score", "report"}) {
            std::ostringstream cmd;
            cmd << "\"" << kCli << "\" --config \"" << cfg_path << "\" --store \""
                << (dir / "store.jsonl").string() << "\" --out \""
                << (dir / "out").string() << "\" --fixtures \"" << kSource
                << "/fixtures/reddit\" " << verb << " > /dev/null 2>&1";
            if (std::system(cmd.str().c_str()) != 0) return false;
        }
        return true;
    };

    bool ok = run_pipeline("run1") && run_pipeline("run2");
    std::string detail = "pipeline failed";
    if (ok) {
        const std::string scored1 =
            sha256_file_hex((work / "run1/out/scored.csv").string());
        const std::string scored2 =
            sha256_file_hex((work / "run2/out/scored.csv").string());
        const std::string man1 =
            sha256_file_hex((work / "run1/out/report/manifest.json").string());
        const std::string man2 =
            sha256_file_hex((work / "run2/out/report/manifest.json").string());
        ok = scored1 == scored2 && man1 == man2;
        detail = ok ? "scored CSV and manifest byte-identical across runs"
                    : "byte mismatch between runs";
    }
    fs::remove_all(work);
    report(7, "e2e-determinism", ok, detail);
}

// ---------------------------------------------------------------------------
// 8. Qualitative validation ordering on the shipped labeled set.
// ---------------------------------------------------------------------------
void criterion_validation_shape() {
    const fs::path work = fs::temp_directory_path() /
                          ("extremis_accept_val_" + std::to_string(::getpid()));
    fs::remove_all(work);
    fs::create_directories(work);

    RunConfig cfg;
    cfg.store_path = (work / "store.jsonl").string();
    cfg.out_dir = (work / "out").string();
    cfg.valence_lexicon = kSource + "/data/valence_lexicon.tsv";
    cfg.pattern_lexicon = kSource + "/data/pattern_lexicon.csv";
    cfg.boosters = kSource + "/data/boosters.txt";
    cfg.negators = kSource + "/data/negators.txt";
    cfg.stopwords = kSource + "/data/stopwords_en.txt";
    cfg.events = kSource + "/data/events/israel_palestine_2023.csv";

    bool ok = cmd_validate(cfg, kSource + "/fixtures/validation_50.csv") == 0;
    double extreme = -1, moderate = -1, neutral = -1;
    if (ok) {
        CsvReader r((fs::path(cfg.out_dir) / "validation_stats.csv").string());
        std::vector<std::string> fields;
        r.next(fields);  // header
        while (r.next(fields)) {
            if (fields.size() != 7) continue;
            const double chi_norm = std::stod(fields[5]);
            if (fields[0] == "Extreme") extreme = chi_norm;
            if (fields[0] == "Moderate") moderate = chi_norm;
            if (fields[0] == "Neutral") neutral = chi_norm;
        }
        ok = extreme > moderate && moderate > neutral && neutral >= 0;
    }
    fs::remove_all(work);
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "mean chi_norm: Extreme %.3f > Moderate %.3f > Neutral %.3f",
                  extreme, moderate, neutral);
    report(8, "validation-shape", ok, detail);
}

// ---------------------------------------------------------------------------
// 9. Throughput and parallel speedup on 500k synthetic comments.
// ---------------------------------------------------------------------------
std::size_t peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream ss(line.substr(6));
            std::size_t kb = 0;
            ss >> kb;
            return kb;
        }
    }
    return 0;
}

void criterion_throughput(const ValenceEngine& valence, const PatternEngine& pattern) {
    std::mt19937 rng(9009);
    SubmissionSet set;
    set.reserve(500000);
    std::poisson_distribution<int> length(30);
    for (int i = 0; i < 500000; ++i) {
        Submission s;
        s.id = "c" + std::to_string(i);
        s.kind = Kind::comment;
        s.post_id = "parent";
        s.subreddit = "synthetic";
        s.text = random_text(rng, std::max(1, length(rng)));
        s.upvotes = static_cast<std::int64_t>(rng() % 500) - 50;
        s.created_at = 1696636800 + (rng() % 90) * 86400;
        s.retrieved_at = s.created_at + 3600;
        set.push_back(std::move(s));
    }

    ScoreOptions multi;
    multi.threads = std::max(2u, std::thread::hardware_concurrency());
    auto start = std::chrono::steady_clock::now();
    double checksum_multi = 0;
    {
        ScoreCorpusResult r = score_corpus(set, valence, pattern, multi);
        for (const auto& it : r.items) checksum_multi += it.chi_lu;
    }
    const double t_multi = seconds_since(start);

    ScoreOptions single;
    single.threads = 1;
    start = std::chrono::steady_clock::now();
    double checksum_single = 0;
    {
        ScoreCorpusResult r = score_corpus(set, valence, pattern, single);
        for (const auto& it : r.items) checksum_single += it.chi_lu;
    }
    const double t_single = seconds_since(start);

    const double speedup = t_single / t_multi;
    const double rss_gb = static_cast<double>(peak_rss_kb()) / (1024.0 * 1024.0);
    const bool identical = checksum_multi == checksum_single;

    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "multi %.1f s (x%u threads), single %.1f s, speedup %.2fx, "
                  "peak RSS %.2f GB%s",
                  t_multi, multi.threads, t_single, speedup, rss_gb,
                  identical ? "" : ", CHECKSUM MISMATCH");
    report(9, "throughput", t_multi < 60.0 && speedup >= 2.0 && rss_gb < 2.0 &&
                              identical,
           detail);
}

}  // namespace

int main() {
    std::printf("extremis acceptance suite\n");
    const ValenceEngine valence = load_valence();
    const PatternEngine pattern = load_pattern();

    criterion_formula_oracle(valence, pattern);
    criterion_ranking_invariance();
    criterion_monotonicity();
    criterion_valence_reference(valence);
    criterion_range_fuzzing(valence, pattern);
    criterion_analytics_oracles();
    criterion_e2e_determinism();
    criterion_validation_shape();
    criterion_throughput(valence, pattern);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
