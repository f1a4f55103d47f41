#pragma once

#include <string>

#include "extremis/config.hpp"

namespace extremis {

// Exit codes shared by the CLI and the command implementations.
//   0  success
//   1  usage, configuration or I/O failure
//   2  credential / network failure
//   3  degenerate or empty-after-filter corpus
//   4  missing scored CSV
//   5  unknown validation label
enum ExitCode {
    kExitOk = 0,
    kExitError = 1,
    kExitCredential = 2,
    kExitDegenerateCorpus = 3,
    kExitMissingScored = 4,
    kExitUnknownLabel = 5,
};

int cmd_ingest(const RunConfig& cfg);
int cmd_score(const RunConfig& cfg);
int cmd_report(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg, const std::string& labeled_csv);
int cmd_corpus(const RunConfig& cfg);

// Path of the scored CSV and its sidecar under an output directory.
std::string scored_csv_path(const RunConfig& cfg);
std::string score_meta_path(const RunConfig& cfg);

}  // namespace extremis
