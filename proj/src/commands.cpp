#include "extremis/commands.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "extremis/analytics.hpp"
#include "extremis/csv.hpp"
#include "extremis/ingest.hpp"
#include "extremis/sha256.hpp"
#include "extremis/store.hpp"
#include "extremis/textstats.hpp"

namespace extremis {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void error_json(const std::string& kind, const std::string& message,
                const json& extra = json::object()) {
    json j = extra;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << std::endl;
}

// Advisory lock: one command at a time per store.
class StoreLock {
public:
    explicit StoreLock(const std::string& store_path) {
        path_ = store_path + ".lock";
        fd_ = ::open(path_.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ < 0) throw std::runtime_error("cannot open lock file: " + path_);
        if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
            ::close(fd_);
            fd_ = -1;
            throw std::runtime_error("store is locked by another command: " + path_);
        }
    }
    ~StoreLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    StoreLock(const StoreLock&) = delete;
    StoreLock& operator=(const StoreLock&) = delete;

private:
    std::string path_;
    int fd_ = -1;
};

ScoreOptions score_options(const RunConfig& cfg, bool validation_mode) {
    ScoreOptions opts;
    opts.scope = cfg.means_scope;
    opts.validation_mode = validation_mode;
    opts.threads = cfg.threads;
    opts.log_base = cfg.log_base_value();
    return opts;
}

struct Engines {
    ValenceEngine valence;
    PatternEngine pattern;
};

Engines load_engines(const RunConfig& cfg) {
    cfg.validate_files();
    return Engines{
        ValenceEngine(ValenceLexicon::load(cfg.valence_lexicon, cfg.boosters,
                                           cfg.negators)),
        PatternEngine(PatternLexicon::load(cfg.pattern_lexicon, cfg.negators))};
}

json file_entry(const std::string& path) {
    return json{{"file", fs::path(path).filename().string()},
                {"sha256", sha256_file_hex(path)}};
}

json lexicon_hashes(const RunConfig& cfg) {
    return json{{"valence_lexicon", file_entry(cfg.valence_lexicon)},
                {"pattern_lexicon", file_entry(cfg.pattern_lexicon)},
                {"boosters", file_entry(cfg.boosters)},
                {"negators", file_entry(cfg.negators)},
                {"stopwords", file_entry(cfg.stopwords)}};
}

const std::vector<std::string> kScoredHeader = {
    "id", "subreddit", "kind", "date", "a",        "p",     "s",
    "L",  "u",         "n",    "chi",  "chi_norm", "chi_l", "chi_lu",
    "excluded"};

void write_scored_csv(const std::vector<ScoredSubmission>& items,
                      const std::string& path) {
    CsvWriter w(path);
    w.row(kScoredHeader);
    for (const auto& it : items) {
        w.row({it.submission.id, it.submission.subreddit,
               kind_name(it.submission.kind),
               format_day(day_of(it.submission.created_at)),
               format_number(it.scores.a), format_number(it.scores.p),
               format_number(it.scores.s), std::to_string(it.length),
               std::to_string(it.upvotes), std::to_string(it.n),
               format_number(it.chi), format_number(it.chi_norm),
               format_number(it.chi_l), format_number(it.chi_lu),
               it.excluded ? "1" : "0"});
    }
}

std::vector<ScoredSubmission> read_scored_csv(
    const std::string& path,
    const std::unordered_map<std::string, const Submission*>& store_index) {
    CsvReader reader(path);
    std::vector<std::string> fields;
    if (!reader.next(fields) || fields != kScoredHeader)
        throw std::runtime_error("unexpected scored CSV header in " + path);
    std::vector<ScoredSubmission> items;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (fields.size() != kScoredHeader.size())
            throw std::runtime_error("short row in " + path);
        ScoredSubmission it;
        it.submission.id = fields[0];
        it.submission.subreddit = fields[1];
        it.submission.kind = fields[2] == "post" ? Kind::post : Kind::comment;
        auto day = parse_day(fields[3]);
        if (!day) throw std::runtime_error("bad date in " + path + ": " + fields[3]);
        it.submission.created_at = *day * 86400;
        it.submission.retrieved_at = it.submission.created_at;
        it.submission.post_id =
            it.submission.kind == Kind::post ? it.submission.id : it.submission.id + "_p";
        it.scores.a = std::stod(fields[4]);
        it.scores.p = std::stod(fields[5]);
        it.scores.s = std::stod(fields[6]);
        it.length = std::stoul(fields[7]);
        it.upvotes = std::stoll(fields[8]);
        it.n = std::stoll(fields[9]);
        it.chi = std::stod(fields[10]);
        it.chi_norm = std::stod(fields[11]);
        it.chi_l = std::stod(fields[12]);
        it.chi_lu = std::stod(fields[13]);
        it.excluded = fields[14] == "1";
        auto found = store_index.find(it.submission.id);
        if (found != store_index.end()) it.submission.text = found->second->text;
        items.push_back(std::move(it));
    }
    return items;
}

void write_series_csv(const std::string& path, const DailySeries& series) {
    CsvWriter w(path);
    w.row({"date", "value"});
    for (const auto& pt : series)
        w.row({format_day(pt.day), format_number(pt.value)});
}

// Event chronology: CSV date,description,reference.
std::map<Day, std::string> load_events(const std::string& path) {
    std::map<Day, std::string> events;
    if (path.empty() || !fs::exists(path)) return events;
    CsvReader reader(path);
    std::vector<std::string> fields;
    bool first = true;
    while (reader.next(fields)) {
        if (first) {
            first = false;
            if (!fields.empty() && fields[0] == "date") continue;
        }
        if (fields.size() < 2) continue;
        auto day = parse_day(fields[0]);
        if (!day) continue;
        std::string& slot = events[*day];
        if (!slot.empty()) slot += "; ";
        slot += fields[1];
    }
    return events;
}

void write_deviation_csv(const std::string& path, const DailySeries& series,
                         const std::map<Day, std::string>& events) {
    CsvWriter w(path);
    w.row({"date", "value", "annotation"});
    for (const auto& pt : series) {
        auto it = events.find(pt.day);
        w.row({format_day(pt.day), format_number(pt.value),
               it == events.end() ? "" : it->second});
    }
}

void write_histogram_csv(const std::string& path, const Histogram& h) {
    CsvWriter w(path);
    w.row({"bin_lo", "bin_hi", "count"});
    for (size_t i = 0; i + 1 < h.edges.size(); ++i)
        w.row({format_number(h.edges[i]), format_number(h.edges[i + 1]),
               std::to_string(h.counts[i])});
    if (h.overflow > 0) w.row({"overflow", "", std::to_string(h.overflow)});
}

std::vector<double> selector_column(const std::vector<ScoredSubmission>& items,
                                    Selector sel) {
    std::vector<double> out;
    for (const auto& it : items)
        if (!it.excluded) out.push_back(selector_value(it, sel));
    return out;
}

double corpus_selector_mean(const std::vector<ScoredSubmission>& items, Selector sel) {
    double sum = 0.0;
    size_t n = 0;
    for (const auto& it : items) {
        if (it.excluded) continue;
        sum += selector_value(it, sel);
        ++n;
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::vector<double> uniform_edges(double lo, double hi, size_t bins) {
    if (hi <= lo) hi = lo + 1.0;
    std::vector<double> edges;
    edges.reserve(bins + 1);
    for (size_t i = 0; i <= bins; ++i)
        edges.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(bins));
    return edges;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const CredentialError& e) {
        error_json("credential", e.what());
        return kExitCredential;
    } catch (const RateLimitError& e) {
        error_json("rate_limit", e.what(), {{"retry_after", e.retry_after_seconds}});
        return kExitCredential;
    } catch (const NotFoundError& e) {
        error_json("not_found", e.what());
        return kExitCredential;
    } catch (const DegenerateCorpusError& e) {
        error_json("degenerate_corpus", e.what(), {{"component", e.component()}});
        return kExitDegenerateCorpus;
    } catch (const EmptyCorpusError& e) {
        error_json("empty_corpus", e.what());
        return kExitDegenerateCorpus;
    } catch (const std::exception& e) {
        error_json("failure", e.what());
        return kExitError;
    }
}

}  // namespace

std::string scored_csv_path(const RunConfig& cfg) {
    return (fs::path(cfg.out_dir) / "scored.csv").string();
}

std::string score_meta_path(const RunConfig& cfg) {
    return (fs::path(cfg.out_dir) / "score_meta.json").string();
}

int cmd_ingest(const RunConfig& cfg) {
    return run_guarded([&]() -> int {
        if (cfg.subreddits.empty())
            throw std::runtime_error("no subreddits configured");
        StoreLock lock(cfg.store_path);

        SubmissionSet batch;
        struct Tally { size_t posts = 0, comments = 0; };
        std::vector<std::pair<std::string, Tally>> tallies;

        auto ingest_poll = [&](SubmissionSource& source, const std::string& sub,
                               Tally& tally) {
            SubmissionSet posts = source.fetch_top_posts(sub, cfg.top_limit);
            for (auto& post : posts) {
                SubmissionSet comments;
                try {
                    comments = source.fetch_comments(post.id);
                    post.n_comments = static_cast<std::int64_t>(comments.size());
                } catch (const NotFoundError&) {
                    // No recorded/retrievable comments; keep the listing count.
                }
                tally.posts += 1;
                tally.comments += comments.size();
                batch.push_back(std::move(post));
                for (auto& c : comments) batch.push_back(std::move(c));
            }
        };

        if (cfg.fixture_dir) {
            FixtureSource fixtures(*cfg.fixture_dir);
            for (const auto& sub : cfg.subreddits) {
                Tally tally;
                for (const auto& file : fixtures.poll_files(sub)) {
                    FixturePoll poll = FixturePoll::from_file(file);
                    ingest_poll(poll, sub, tally);
                }
                tallies.emplace_back(sub, tally);
            }
        } else {
            auto creds = Credentials::from_env();
            if (!creds)
                throw CredentialError(
                    "EXTREMIS_CLIENT_ID / EXTREMIS_CLIENT_SECRET not set");
            RedditClient client(make_https_transport(), *creds);
            for (const auto& sub : cfg.subreddits) {
                Tally tally;
                for (int attempt = 0;; ++attempt) {
                    try {
                        ingest_poll(client, sub, tally);
                        break;
                    } catch (const RateLimitError& e) {
                        if (attempt >= 1) throw;
                        std::this_thread::sleep_for(
                            std::chrono::seconds(e.retry_after_seconds));
                    }
                }
                tallies.emplace_back(sub, tally);
            }
        }

        apply_preprocess(batch);

        SubmissionSet store;
        if (fs::exists(cfg.store_path)) {
            LoadResult loaded = load_jsonl(cfg.store_path);
            for (const auto& warning : loaded.warnings)
                std::cerr << "store warning " << warning << "\n";
            store = std::move(loaded.set);
        }
        store.insert(store.end(), batch.begin(), batch.end());
        store = dedupe(store);
        write_jsonl(store, cfg.store_path);

        for (const auto& [sub, tally] : tallies)
            std::cout << sub << ": " << tally.posts << " posts, " << tally.comments
                      << " comments\n";
        std::cout << "store: " << store.size() << " records -> " << cfg.store_path
                  << "\n";
        return kExitOk;
    });
}

int cmd_score(const RunConfig& cfg) {
    return run_guarded([&]() -> int {
        StoreLock lock(cfg.store_path);
        LoadResult loaded = load_jsonl(cfg.store_path);
        for (const auto& warning : loaded.warnings)
            std::cerr << "store warning " << warning << "\n";

        SubmissionSet set = dedupe(loaded.set);
        FilterResult filtered = filter_by_flair(set, cfg.flair_policy);
        if (filtered.orphan_comments_kept > 0)
            std::cerr << "orphan comments kept: " << filtered.orphan_comments_kept
                      << "\n";
        if (filtered.set.empty()) throw EmptyCorpusError();

        Engines engines = load_engines(cfg);
        ScoreCorpusResult scored = score_corpus(filtered.set, engines.valence,
                                                engines.pattern,
                                                score_options(cfg, false));

        fs::create_directories(cfg.out_dir);
        write_scored_csv(scored.items, scored_csv_path(cfg));

        size_t excluded = 0;
        for (const auto& it : scored.items)
            if (it.excluded) ++excluded;

        json meta;
        meta["corpus_means"] = {{"mean_a", scored.means.mean_a},
                                {"mean_abs_p", scored.means.mean_abs_p},
                                {"mean_s", scored.means.mean_s}};
        if (!scored.subreddit_means.empty()) {
            json per;
            for (const auto& [sub, m] : scored.subreddit_means)
                per[sub] = {{"mean_a", m.mean_a},
                            {"mean_abs_p", m.mean_abs_p},
                            {"mean_s", m.mean_s}};
            meta["subreddit_means"] = per;
        }
        meta["lexicons"] = lexicon_hashes(cfg);
        meta["settings"] = {{"log_base", cfg.log_base},
                            {"means_scope", cfg.means_scope == MeansScope::corpus
                                                ? "corpus"
                                                : "subreddit"}};
        meta["counts"] = {{"total", scored.items.size()}, {"excluded", excluded}};
        std::ofstream out(score_meta_path(cfg), std::ios::binary);
        out << meta.dump(2) << "\n";

        std::cout << "scored " << scored.items.size() << " submissions (" << excluded
                  << " excluded) -> " << scored_csv_path(cfg) << "\n";
        return kExitOk;
    });
}

namespace {

// Report/corpus share the scored-CSV + store join.
struct JoinedScores {
    SubmissionSet store;
    std::vector<ScoredSubmission> items;
};

JoinedScores load_scored(const RunConfig& cfg) {
    JoinedScores out;
    LoadResult loaded = load_jsonl(cfg.store_path);
    out.store = dedupe(loaded.set);
    std::unordered_map<std::string, const Submission*> index;
    index.reserve(out.store.size());
    for (const auto& s : out.store) index[s.id] = &s;
    out.items = read_scored_csv(scored_csv_path(cfg), index);
    return out;
}

std::vector<Selector> canonical_selectors(const RunConfig& cfg) {
    return {Selector::a, Selector::abs_p,
            cfg.invert_subjectivity ? Selector::inv_s : Selector::s,
            Selector::chi_norm, Selector::chi_lu};
}

}  // namespace

int cmd_report(const RunConfig& cfg) {
    return run_guarded([&]() -> int {
        if (!fs::exists(scored_csv_path(cfg))) {
            error_json("missing_scored", "scored CSV not found: " + scored_csv_path(cfg));
            return kExitMissingScored;
        }
        JoinedScores joined = load_scored(cfg);
        const auto& items = joined.items;

        const fs::path out_dir = fs::path(cfg.out_dir) / "report";
        fs::create_directories(out_dir);
        std::vector<std::string> artifacts;
        auto artifact = [&](const std::string& name) {
            artifacts.push_back(name);
            return (out_dir / name).string();
        };

        const std::vector<Selector> canon = canonical_selectors(cfg);

        // Descriptive statistics over all five canonical stages.
        {
            CsvWriter w(artifact("descriptive_stats.csv"));
            w.row({"selector", "count", "mean", "std", "min", "q25", "median", "q75",
                   "max"});
            for (Selector sel : canon) {
                DescriptiveStats st = describe(selector_column(items, sel));
                w.row({selector_name(sel), std::to_string(st.count),
                       format_number(st.mean), format_number(st.stddev),
                       format_number(st.min), format_number(st.q25),
                       format_number(st.median), format_number(st.q75),
                       format_number(st.max)});
            }
        }

        // Pearson correlation matrix.
        {
            CorrelationMatrix m = correlation_matrix(items, canon);
            CsvWriter w(artifact("correlation_matrix.csv"));
            std::vector<std::string> header = {"selector"};
            for (Selector sel : canon) header.push_back(selector_name(sel));
            w.row(header);
            for (size_t i = 0; i < canon.size(); ++i) {
                std::vector<std::string> row = {selector_name(canon[i])};
                for (size_t j = 0; j < canon.size(); ++j)
                    row.push_back(m.defined[i][j] ? format_number(m.r[i][j]) : "");
                w.row(row);
            }
        }

        // Interest over time: daily counts with MA and running mean.
        {
            DailySeries counts = daily_count(items, cfg.count_posts_only);
            write_series_csv(artifact("daily_count.csv"), counts);
            write_series_csv(artifact("daily_count_ma.csv"),
                             moving_average(counts, cfg.ma_window));
            write_series_csv(artifact("daily_count_running_mean.csv"),
                             running_mean(counts));
        }

        // Daily means for each configured selector, overall and per
        // subreddit, plus the deviation series with the event overlay.
        const std::map<Day, std::string> events = load_events(cfg.events);
        std::vector<std::string> subreddits;
        for (const auto& it : items)
            if (std::find(subreddits.begin(), subreddits.end(),
                          it.submission.subreddit) == subreddits.end())
                subreddits.push_back(it.submission.subreddit);
        std::sort(subreddits.begin(), subreddits.end());

        for (const std::string& sel_name : cfg.selectors) {
            auto sel = selector_from_name(sel_name);
            if (!sel) throw std::runtime_error("unknown selector: " + sel_name);
            DailySeries mean_series = daily_mean(items, *sel);
            write_series_csv(artifact("daily_mean_" + sel_name + ".csv"), mean_series);
            write_series_csv(artifact("daily_mean_" + sel_name + "_ma.csv"),
                             moving_average(mean_series, cfg.ma_window));
            for (const auto& sub : subreddits) {
                std::vector<ScoredSubmission> only;
                for (const auto& it : items)
                    if (it.submission.subreddit == sub) only.push_back(it);
                DailySeries sub_series = daily_mean(only, *sel);
                write_series_csv(
                    artifact("daily_mean_" + sel_name + "_sub_" + sub + ".csv"),
                    sub_series);
                write_series_csv(
                    artifact("daily_mean_" + sel_name + "_sub_" + sub + "_ma.csv"),
                    moving_average(sub_series, cfg.ma_window));
            }
            write_deviation_csv(
                artifact("deviation_" + sel_name + ".csv"),
                deviation_from_mean(mean_series, corpus_selector_mean(items, *sel)),
                events);

            for (const auto& keyword : cfg.cohorts) {
                std::vector<ScoredSubmission> members = cohort(items, keyword);
                DailySeries series = daily_mean(members, *sel);
                write_series_csv(
                    artifact("cohort_" + keyword + "_" + sel_name + ".csv"), series);
                write_series_csv(
                    artifact("cohort_" + keyword + "_" + sel_name + "_ma.csv"),
                    moving_average(series, cfg.ma_window));
            }
        }

        // Top-N by final score; histogram of every stage over that set.
        {
            std::vector<ScoredSubmission> top =
                top_n(items, Selector::chi_lu, cfg.top_n_hist);
            for (Selector sel : canon) {
                std::vector<double> values;
                for (const auto& it : top)
                    if (!it.excluded) values.push_back(selector_value(it, sel));
                double hi = 1.0;
                if (sel == Selector::chi_norm || sel == Selector::chi_lu) {
                    hi = 0.0;
                    for (double v : values) hi = std::max(hi, v);
                    if (hi <= 0.0) hi = 1.0;
                }
                Histogram h =
                    histogram(values, uniform_edges(0.0, hi, cfg.histogram_bins));
                write_histogram_csv(
                    artifact(std::string("hist_top_") + selector_name(sel) + ".csv"),
                    h);
            }
        }

        // Per-stage corpora of the top posts: term frequencies and the
        // pairwise Jaccard matrix.
        {
            StopwordSet stopwords = load_stopwords(cfg.stopwords);
            std::vector<std::pair<std::string, FreqTable>> corpora;
            for (Selector sel : canon)
                corpora.emplace_back(selector_name(sel),
                                     build_corpus(items, sel, cfg.corpus_top_n,
                                                  stopwords));
            for (const auto& [name, table] : corpora) {
                CsvWriter w(artifact("freq_" + name + ".csv"));
                w.row({"token", "count"});
                for (const auto& [token, count] : export_frequencies(table, cfg.freq_k))
                    w.row({token, std::to_string(count)});
            }
            auto matrix = jaccard_matrix(corpora);
            CsvWriter w(artifact("jaccard_matrix.csv"));
            std::vector<std::string> header = {"corpus"};
            for (const auto& [name, table] : corpora) header.push_back(name);
            w.row(header);
            for (size_t i = 0; i < corpora.size(); ++i) {
                std::vector<std::string> row = {corpora[i].first};
                for (size_t j = 0; j < corpora.size(); ++j)
                    row.push_back(format_number(matrix[i][j]));
                w.row(row);
            }
        }

        // Manifest with content hashes of every artifact and input.
        std::sort(artifacts.begin(), artifacts.end());
        json manifest;
        manifest["artifacts"] = json::array();
        for (const auto& name : artifacts)
            manifest["artifacts"].push_back(
                {{"path", name}, {"sha256", sha256_file_hex((out_dir / name).string())}});
        manifest["inputs"] = {{"scored_csv", file_entry(scored_csv_path(cfg))},
                              {"store", file_entry(cfg.store_path)}};
        if (fs::exists(cfg.events)) manifest["inputs"]["events"] = file_entry(cfg.events);
        manifest["inputs"]["lexicons"] = lexicon_hashes(cfg);
        manifest["settings"] = {
            {"selectors", cfg.selectors},
            {"cohorts", cfg.cohorts},
            {"ma_window", cfg.ma_window},
            {"invert_subjectivity", cfg.invert_subjectivity},
            {"count_posts_only", cfg.count_posts_only},
            {"top_n_hist", cfg.top_n_hist},
            {"corpus_top_n", cfg.corpus_top_n},
            {"freq_k", cfg.freq_k},
            {"histogram_bins", cfg.histogram_bins},
            {"log_base", cfg.log_base},
            {"means_scope", cfg.means_scope == MeansScope::corpus ? "corpus"
                                                                  : "subreddit"}};
        std::ofstream mout(out_dir / "manifest.json", std::ios::binary);
        mout << manifest.dump(2) << "\n";

        std::cout << "report: " << artifacts.size() + 1 << " artifacts -> "
                  << out_dir.string() << "\n";
        return kExitOk;
    });
}

int cmd_validate(const RunConfig& cfg, const std::string& labeled_csv) {
    return run_guarded([&]() -> int {
        CsvReader reader(labeled_csv);
        std::vector<std::string> fields;
        if (!reader.next(fields))
            throw std::runtime_error("empty validation CSV: " + labeled_csv);
        auto col = [&](const char* name) -> size_t {
            for (size_t i = 0; i < fields.size(); ++i)
                if (fields[i] == name) return i;
            throw std::runtime_error(std::string("validation CSV lacks column ") +
                                     name);
        };
        const size_t text_col = col("text");
        const size_t sub_col = col("subreddit");
        const size_t label_col = col("label");

        SubmissionSet set;
        std::vector<Label> labels;
        std::vector<std::string> row_fields;
        size_t rowno = 1;
        while (reader.next(row_fields)) {
            ++rowno;
            if (row_fields.size() == 1 && row_fields[0].empty()) continue;
            if (row_fields.size() <= std::max({text_col, sub_col, label_col}))
                throw std::runtime_error(labeled_csv + ": short row " +
                                         std::to_string(rowno));
            auto label = label_from_name(row_fields[label_col]);
            if (!label) {
                error_json("unknown_label",
                           "unknown label '" + row_fields[label_col] + "'",
                           {{"row", rowno}});
                return kExitUnknownLabel;
            }
            Submission s;
            s.id = "row" + std::to_string(rowno);
            s.kind = Kind::post;
            s.post_id = s.id;
            s.subreddit = row_fields[sub_col];
            s.text = row_fields[text_col];
            s.raw_text = row_fields[text_col];
            s.upvotes = 0;
            s.created_at = 0;
            s.retrieved_at = 0;
            set.push_back(std::move(s));
            labels.push_back(*label);
        }
        if (set.empty()) throw EmptyCorpusError();

        Engines engines = load_engines(cfg);
        ScoreOptions opts = score_options(cfg, /*validation_mode=*/true);
        opts.scope = MeansScope::corpus;  // one validation corpus, one mean
        ScoreCorpusResult scored =
            score_corpus(set, engines.valence, engines.pattern, opts);

        std::vector<std::pair<Label, ScoredSubmission>> labeled;
        for (size_t i = 0; i < scored.items.size(); ++i)
            labeled.emplace_back(labels[i], scored.items[i]);
        std::vector<LabelRow> rows = label_stats(labeled);

        fs::create_directories(cfg.out_dir);
        const std::string out_path =
            (fs::path(cfg.out_dir) / "validation_stats.csv").string();
        CsvWriter w(out_path);
        const std::vector<std::string> header = {"label", "count", "a",
                                                 "abs_p", "s",     "chi_norm",
                                                 "chi_l"};
        w.row(header);
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << header[i];
        std::cout << "\n";
        for (const auto& row : rows) {
            std::vector<std::string> cells = {
                label_name(row.label),          std::to_string(row.count),
                format_number(row.mean_a),      format_number(row.mean_abs_p),
                format_number(row.mean_s),      format_number(row.mean_chi_norm),
                format_number(row.mean_chi_l)};
            w.row(cells);
            for (size_t i = 0; i < cells.size(); ++i)
                std::cout << (i ? "," : "") << cells[i];
            std::cout << "\n";
        }
        return kExitOk;
    });
}

int cmd_corpus(const RunConfig& cfg) {
    return run_guarded([&]() -> int {
        if (!fs::exists(scored_csv_path(cfg))) {
            error_json("missing_scored", "scored CSV not found: " + scored_csv_path(cfg));
            return kExitMissingScored;
        }
        JoinedScores joined = load_scored(cfg);
        StopwordSet stopwords = load_stopwords(cfg.stopwords);

        const fs::path out_dir = fs::path(cfg.out_dir) / "corpus";
        fs::create_directories(out_dir);

        std::vector<std::pair<std::string, FreqTable>> corpora;
        for (Selector sel : canonical_selectors(cfg))
            corpora.emplace_back(selector_name(sel),
                                 build_corpus(joined.items, sel, cfg.corpus_top_n,
                                              stopwords));
        for (const auto& [name, table] : corpora) {
            CsvWriter w((out_dir / ("freq_" + name + ".csv")).string());
            w.row({"token", "count"});
            for (const auto& [token, count] : export_frequencies(table, cfg.freq_k))
                w.row({token, std::to_string(count)});
        }
        auto matrix = jaccard_matrix(corpora);
        CsvWriter w((out_dir / "jaccard_matrix.csv").string());
        std::vector<std::string> header = {"corpus"};
        for (const auto& [name, table] : corpora) header.push_back(name);
        w.row(header);
        for (size_t i = 0; i < corpora.size(); ++i) {
            std::vector<std::string> row = {corpora[i].first};
            for (size_t j = 0; j < corpora.size(); ++j)
                row.push_back(format_number(matrix[i][j]));
            w.row(row);
        }
        std::cout << "corpus: " << corpora.size() << " frequency tables -> "
                  << out_dir.string() << "\n";
        return kExitOk;
    });
}

}  // namespace extremis
