#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremis/time_util.hpp"

namespace extremis {

enum class Kind { post, comment };

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& s);

// One Reddit post or comment. `text` is the clean (lowercased,
// whitespace-collapsed) body once a record has been through ingest;
// `raw_text` keeps the original body so the valence engine can see
// ALL-CAPS emphasis.
struct Submission {
    std::string id;
    Kind kind = Kind::post;
    std::string post_id;
    std::string subreddit;
    std::optional<std::string> title;
    std::string text;
    std::optional<std::string> raw_text;
    std::int64_t upvotes = 0;
    std::optional<std::string> flair;
    Timestamp created_at = 0;
    Timestamp retrieved_at = 0;
    std::optional<std::int64_t> n_comments;
    // Unknown JSONL keys, preserved on rewrite.
    std::map<std::string, std::string> extra;

    bool is_post() const { return kind == Kind::post; }

    const std::string& raw_or_text() const { return raw_text ? *raw_text : text; }

    bool operator==(const Submission&) const = default;
};

using SubmissionSet = std::vector<Submission>;

// Per-subreddit flair allow-lists; subreddits absent from the map are
// unfiltered.
struct FlairPolicy {
    std::map<std::string, std::set<std::string>> allow;

    bool empty() const { return allow.empty(); }
    bool governs(const std::string& subreddit) const {
        return allow.count(subreddit) != 0;
    }
    bool permits(const std::string& subreddit,
                 const std::optional<std::string>& flair) const;
};

// Returns an error message on invariant violation, empty string if valid.
std::string validate_submission(const Submission& s);

// JSONL line <-> Submission. Parse returns error text via `err` and
// leaves `out` untouched on failure.
bool submission_from_json_line(const std::string& line, Submission& out, std::string& err);
std::string submission_to_json_line(const Submission& s);

}  // namespace extremis
