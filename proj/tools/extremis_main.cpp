// extremis: lexicon-based extremism scoring over subreddit submissions.
//
// Subcommands: ingest, score, report, validate, corpus.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "extremis/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lexicon-based extremism scoring pipeline"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> store_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> fixtures_dir;
    std::optional<std::string> means_scope;
    std::optional<std::size_t> ma_window;
    std::vector<std::string> selectors;
    bool invert_subjectivity = false;
    std::optional<unsigned> threads;

    app.add_option("--config", config_path, "configuration file (key = value)");
    app.add_option("--store", store_path, "JSONL submission store");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--fixtures", fixtures_dir,
                   "fixture directory of recorded responses (offline mode)");
    app.add_option("--means-scope", means_scope, "corpus|subreddit");
    app.add_option("--ma-window", ma_window, "moving-average window (days)");
    app.add_option("--selector", selectors, "score stage(s) for series exports");
    app.add_flag("--invert-subjectivity", invert_subjectivity,
                 "export 1 - s instead of s");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* ingest = app.add_subcommand("ingest", "poll subreddits into the store");
    auto* score = app.add_subcommand("score", "run the scoring pipeline");
    auto* report = app.add_subcommand("report", "write the report bundle");
    auto* validate =
        app.add_subcommand("validate", "score a labeled CSV in validation mode");
    auto* corpus = app.add_subcommand("corpus", "frequency tables and Jaccard matrix");

    std::string labeled_csv;
    validate->add_option("labeled_csv", labeled_csv, "CSV with text,subreddit,label")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? extremis::kExitOk : extremis::kExitError;
    }

    extremis::RunConfig cfg;
    try {
        if (config_path) cfg = extremis::RunConfig::load(*config_path);
        if (store_path) cfg.store_path = *store_path;
        if (out_dir) cfg.out_dir = *out_dir;
        if (fixtures_dir) cfg.fixture_dir = *fixtures_dir;
        if (means_scope) {
            if (*means_scope == "corpus")
                cfg.means_scope = extremis::MeansScope::corpus;
            else if (*means_scope == "subreddit")
                cfg.means_scope = extremis::MeansScope::per_subreddit;
            else
                throw std::runtime_error("--means-scope must be corpus|subreddit");
        }
        if (ma_window) cfg.ma_window = *ma_window;
        if (!selectors.empty()) cfg.selectors = selectors;
        if (invert_subjectivity) cfg.invert_subjectivity = true;
        if (threads) cfg.threads = *threads;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}"
                  << std::endl;
        return extremis::kExitError;
    }

    if (ingest->parsed()) return extremis::cmd_ingest(cfg);
    if (score->parsed()) return extremis::cmd_score(cfg);
    if (report->parsed()) return extremis::cmd_report(cfg);
    if (validate->parsed()) return extremis::cmd_validate(cfg, labeled_csv);
    if (corpus->parsed()) return extremis::cmd_corpus(cfg);
    return extremis::kExitError;
}
