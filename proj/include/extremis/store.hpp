#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extremis/submission.hpp"

namespace extremis {

struct LoadResult {
    SubmissionSet set;
    // One entry per skipped line: "<line-number>: <reason>".
    std::vector<std::string> warnings;
};

// Reads every line of a JSONL store. Malformed lines are skipped and
// reported in `warnings`, never fatal. Throws std::runtime_error when
// the file itself is missing.
LoadResult load_jsonl(const std::string& path);

void write_jsonl(const SubmissionSet& set, const std::string& path);

// Appends records to an existing store (creates the file when absent).
void append_jsonl(const SubmissionSet& set, const std::string& path);

// One record per id: the latest retrieved_at wins, ties broken by later
// input order. Output keeps the order in which ids first appear.
SubmissionSet dedupe(const SubmissionSet& set);

struct FilterResult {
    SubmissionSet set;
    // Comments whose parent post was never collected; kept, but tallied.
    std::size_t orphan_comments_kept = 0;
};

// Posts in policy-governed subreddits survive iff their flair is in the
// allow-list; comments survive iff their parent post does. Comments with
// no parent in the input at all are kept and tallied as orphans.
FilterResult filter_by_flair(const SubmissionSet& set, const FlairPolicy& policy);

}  // namespace extremis
