#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremis/submission.hpp"

namespace extremis {

class CredentialError : public std::runtime_error {
public:
    explicit CredentialError(const std::string& what) : std::runtime_error(what) {}
};

class RateLimitError : public std::runtime_error {
public:
    explicit RateLimitError(long retry_after_seconds)
        : std::runtime_error("rate limited; retry after " +
                             std::to_string(retry_after_seconds) + "s"),
          retry_after_seconds(retry_after_seconds) {}
    long retry_after_seconds;
};

class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

struct IngestConfig {
    std::vector<std::string> subreddits;
    int top_limit = 50;
    // Daily poll cadence, UTC; informational for cron setup.
    std::string poll_time_utc = "12:00";
    // When set, ingestion replays recorded responses and touches no
    // network at all.
    std::optional<std::string> fixture_dir;
};

// Common fetch surface for the live client and fixture replay.
class SubmissionSource {
public:
    virtual ~SubmissionSource() = default;

    // At most `limit` posts in ranking order, retrieved_at stamped by
    // the source.
    virtual SubmissionSet fetch_top_posts(const std::string& subreddit, int limit) = 0;

    // Every retrievable comment of the post, flattened from the reply
    // tree, each with post_id linking back to the parent.
    virtual SubmissionSet fetch_comments(const std::string& post_id) = 0;
};

// Listing-shape parsing shared by both sources. `retrieved_at` stamps
// every record; posts get n_comments from the listing.
SubmissionSet parse_post_listing(const nlohmann::json& listing,
                                 const std::string& subreddit, int limit,
                                 Timestamp retrieved_at);
SubmissionSet parse_comment_response(const nlohmann::json& response,
                                     const std::string& post_id,
                                     const std::string& subreddit,
                                     Timestamp retrieved_at);

// One recorded poll: a JSON bundle
//   {"retrieved_at": ISO-8601, "subreddit": name,
//    "posts": <top-posts listing>, "comments": {"<post_id>": <response>}}
// replayed verbatim, so repeated ingests are byte-stable.
class FixturePoll : public SubmissionSource {
public:
    static FixturePoll from_file(const std::string& path);

    SubmissionSet fetch_top_posts(const std::string& subreddit, int limit) override;
    SubmissionSet fetch_comments(const std::string& post_id) override;

    const std::string& subreddit() const { return subreddit_; }

private:
    std::string subreddit_;
    Timestamp retrieved_at_ = 0;
    std::string posts_json_;
    std::map<std::string, std::string> comments_json_;
};

// Directory of recorded polls named <subreddit>_<date>.json.
class FixtureSource {
public:
    explicit FixtureSource(std::string dir) : dir_(std::move(dir)) {}

    // Recorded poll files for one subreddit, date-sorted.
    std::vector<std::string> poll_files(const std::string& subreddit) const;

private:
    std::string dir_;
};

struct HttpResponse {
    int status = 0;
    std::string body;
    std::map<std::string, std::string> headers;
};

class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse get(const std::string& host, const std::string& path,
                             const std::vector<std::pair<std::string, std::string>>&
                                 headers) = 0;
    virtual HttpResponse post_form(
        const std::string& host, const std::string& path, const std::string& body,
        const std::vector<std::pair<std::string, std::string>>& headers) = 0;
};

std::unique_ptr<HttpTransport> make_https_transport();

struct Credentials {
    std::string client_id;
    std::string client_secret;

    // Reads EXTREMIS_CLIENT_ID / EXTREMIS_CLIENT_SECRET.
    static std::optional<Credentials> from_env();
};

// Live client against the public subreddit JSON API with OAuth bearer
// credentials. Maps 401/403 to CredentialError, 429 to RateLimitError
// (carrying Retry-After), 404 to NotFoundError.
class RedditClient : public SubmissionSource {
public:
    RedditClient(std::shared_ptr<HttpTransport> transport, Credentials creds);

    SubmissionSet fetch_top_posts(const std::string& subreddit, int limit) override;
    SubmissionSet fetch_comments(const std::string& post_id) override;

private:
    const std::string& bearer_token();

    std::shared_ptr<HttpTransport> transport_;
    Credentials creds_;
    std::string token_;
};

// Ingest-side text preparation: body lowercased and whitespace-collapsed
// into `text`, the original kept in `raw_text`.
void apply_preprocess(SubmissionSet& set);

}  // namespace extremis
