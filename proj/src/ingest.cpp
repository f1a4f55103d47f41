#include "extremis/ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "extremis/text.hpp"

namespace extremis {

using nlohmann::json;

namespace {

Timestamp now_utc() {
    return static_cast<Timestamp>(std::time(nullptr));
}

std::string json_string_or(const json& j, const char* key, const std::string& dflt) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) return dflt;
    return it->get<std::string>();
}

std::int64_t json_int_or(const json& j, const char* key, std::int64_t dflt) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number()) return dflt;
    return static_cast<std::int64_t>(it->get<double>());
}

Submission post_from_data(const json& d, const std::string& subreddit,
                          Timestamp retrieved_at) {
    Submission s;
    s.id = json_string_or(d, "id", "");
    s.kind = Kind::post;
    s.post_id = s.id;
    s.subreddit = json_string_or(d, "subreddit", subreddit);
    s.title = json_string_or(d, "title", "");
    s.text = json_string_or(d, "selftext", "");
    s.upvotes = json_int_or(d, "ups", 0);
    if (d.contains("link_flair_text") && d["link_flair_text"].is_string())
        s.flair = d["link_flair_text"].get<std::string>();
    s.created_at = json_int_or(d, "created_utc", 0);
    s.retrieved_at = std::max(retrieved_at, s.created_at);
    std::int64_t nc = json_int_or(d, "num_comments", 0);
    s.n_comments = nc < 0 ? 0 : nc;
    return s;
}

void collect_comments(const json& children, const std::string& post_id,
                      const std::string& subreddit, Timestamp retrieved_at,
                      SubmissionSet& out) {
    for (const auto& child : children) {
        if (!child.is_object()) continue;
        const std::string kind = json_string_or(child, "kind", "");
        if (kind != "t1") continue;  // "more" stubs et al. carry no text
        const auto d_it = child.find("data");
        if (d_it == child.end() || !d_it->is_object()) continue;
        const json& d = *d_it;
        Submission s;
        s.id = json_string_or(d, "id", "");
        s.kind = Kind::comment;
        s.post_id = post_id;
        s.subreddit = json_string_or(d, "subreddit", subreddit);
        s.text = json_string_or(d, "body", "");
        s.upvotes = json_int_or(d, "ups", 0);
        s.created_at = json_int_or(d, "created_utc", 0);
        s.retrieved_at = std::max(retrieved_at, s.created_at);
        if (!s.id.empty()) out.push_back(std::move(s));
        // Replies nest a full listing; an empty string means none.
        auto r_it = d.find("replies");
        if (r_it != d.end() && r_it->is_object() && r_it->contains("data") &&
            (*r_it)["data"].contains("children"))
            collect_comments((*r_it)["data"]["children"], post_id, subreddit,
                             retrieved_at, out);
    }
}

}  // namespace

SubmissionSet parse_post_listing(const json& listing, const std::string& subreddit,
                                 int limit, Timestamp retrieved_at) {
    SubmissionSet out;
    if (!listing.is_object() || !listing.contains("data")) return out;
    const json& data = listing["data"];
    if (!data.contains("children") || !data["children"].is_array()) return out;
    for (const auto& child : data["children"]) {
        if (static_cast<int>(out.size()) >= limit) break;
        if (!child.is_object() || json_string_or(child, "kind", "") != "t3") continue;
        const auto d_it = child.find("data");
        if (d_it == child.end() || !d_it->is_object()) continue;
        Submission s = post_from_data(*d_it, subreddit, retrieved_at);
        if (!s.id.empty()) out.push_back(std::move(s));
    }
    return out;
}

SubmissionSet parse_comment_response(const json& response, const std::string& post_id,
                                     const std::string& subreddit,
                                     Timestamp retrieved_at) {
    SubmissionSet out;
    // The comments endpoint answers with [post listing, comment listing];
    // accept a bare listing too.
    const json* listing = &response;
    if (response.is_array()) {
        if (response.size() < 2) return out;
        listing = &response[1];
    }
    if (!listing->is_object() || !listing->contains("data")) return out;
    const json& data = (*listing)["data"];
    if (!data.contains("children") || !data["children"].is_array()) return out;
    collect_comments(data["children"], post_id, subreddit, retrieved_at, out);
    return out;
}

FixturePoll FixturePoll::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    json bundle = json::parse(in, nullptr, false);
    if (bundle.is_discarded() || !bundle.is_object())
        throw std::runtime_error("fixture is not a JSON object: " + path);

    FixturePoll poll;
    poll.subreddit_ = json_string_or(bundle, "subreddit", "");
    auto ts = parse_iso8601(json_string_or(bundle, "retrieved_at", ""));
    if (!ts) throw std::runtime_error("fixture missing retrieved_at: " + path);
    poll.retrieved_at_ = *ts;
    if (bundle.contains("posts")) poll.posts_json_ = bundle["posts"].dump();
    if (bundle.contains("comments") && bundle["comments"].is_object())
        for (auto it = bundle["comments"].begin(); it != bundle["comments"].end(); ++it)
            poll.comments_json_[it.key()] = it.value().dump();
    return poll;
}

SubmissionSet FixturePoll::fetch_top_posts(const std::string& subreddit, int limit) {
    if (posts_json_.empty()) return {};
    return parse_post_listing(json::parse(posts_json_), subreddit, limit,
                              retrieved_at_);
}

SubmissionSet FixturePoll::fetch_comments(const std::string& post_id) {
    auto it = comments_json_.find(post_id);
    if (it == comments_json_.end())
        throw NotFoundError("no recorded comments for post " + post_id);
    return parse_comment_response(json::parse(it->second), post_id, subreddit_,
                                  retrieved_at_);
}

std::vector<std::string> FixtureSource::poll_files(const std::string& subreddit) const {
    std::vector<std::string> files;
    const std::string prefix = subreddit + "_";
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() > prefix.size() + 5 && name.rfind(prefix, 0) == 0 &&
            name.substr(name.size() - 5) == ".json")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

namespace {

class HttplibTransport : public HttpTransport {
public:
    HttpResponse get(const std::string& host, const std::string& path,
                     const std::vector<std::pair<std::string, std::string>>& headers)
        override {
        httplib::SSLClient client(host);
        httplib::Headers h(headers.begin(), headers.end());
        auto res = client.Get(path, h);
        return convert(res);
    }

    HttpResponse post_form(
        const std::string& host, const std::string& path, const std::string& body,
        const std::vector<std::pair<std::string, std::string>>& headers) override {
        httplib::SSLClient client(host);
        httplib::Headers h(headers.begin(), headers.end());
        auto res = client.Post(path, h, body, "application/x-www-form-urlencoded");
        return convert(res);
    }

private:
    static HttpResponse convert(const httplib::Result& res) {
        if (!res) throw std::runtime_error("network failure: no response");
        HttpResponse out;
        out.status = res->status;
        out.body = res->body;
        for (const auto& [k, v] : res->headers) out.headers[k] = v;
        return out;
    }
};

[[noreturn]] void raise_for_status(const HttpResponse& res, const std::string& what) {
    if (res.status == 401 || res.status == 403)
        throw CredentialError("authentication rejected while " + what);
    if (res.status == 429) {
        long wait = 60;
        auto it = res.headers.find("Retry-After");
        if (it != res.headers.end()) wait = std::strtol(it->second.c_str(), nullptr, 10);
        throw RateLimitError(wait);
    }
    if (res.status == 404) throw NotFoundError("not found while " + what);
    throw std::runtime_error("unexpected HTTP " + std::to_string(res.status) +
                             " while " + what);
}

}  // namespace

std::unique_ptr<HttpTransport> make_https_transport() {
    return std::make_unique<HttplibTransport>();
}

std::optional<Credentials> Credentials::from_env() {
    const char* id = std::getenv("EXTREMIS_CLIENT_ID");
    const char* secret = std::getenv("EXTREMIS_CLIENT_SECRET");
    if (!id || !secret || !*id || !*secret) return std::nullopt;
    return Credentials{id, secret};
}

RedditClient::RedditClient(std::shared_ptr<HttpTransport> transport, Credentials creds)
    : transport_(std::move(transport)), creds_(std::move(creds)) {}

const std::string& RedditClient::bearer_token() {
    if (!token_.empty()) return token_;
    // HTTP basic auth with the app credentials, client_credentials grant.
    const std::string auth = creds_.client_id + ":" + creds_.client_secret;
    static const char* b64 =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string encoded;
    for (size_t i = 0; i < auth.size(); i += 3) {
        unsigned v = static_cast<unsigned char>(auth[i]) << 16;
        if (i + 1 < auth.size()) v |= static_cast<unsigned char>(auth[i + 1]) << 8;
        if (i + 2 < auth.size()) v |= static_cast<unsigned char>(auth[i + 2]);
        encoded += b64[(v >> 18) & 63];
        encoded += b64[(v >> 12) & 63];
        encoded += (i + 1 < auth.size()) ? b64[(v >> 6) & 63] : '=';
        encoded += (i + 2 < auth.size()) ? b64[v & 63] : '=';
    }
    HttpResponse res = transport_->post_form(
        "www.reddit.com", "/api/v1/access_token", "grant_type=client_credentials",
        {{"Authorization", "Basic " + encoded}, {"User-Agent", "extremis/1.0"}});
    if (res.status != 200) raise_for_status(res, "requesting access token");
    json j = json::parse(res.body, nullptr, false);
    if (j.is_discarded() || !j.contains("access_token"))
        throw CredentialError("token endpoint returned no access_token");
    token_ = j["access_token"].get<std::string>();
    return token_;
}

SubmissionSet RedditClient::fetch_top_posts(const std::string& subreddit, int limit) {
    const std::string path =
        "/r/" + subreddit + "/top.json?t=day&limit=" + std::to_string(limit);
    HttpResponse res = transport_->get(
        "oauth.reddit.com", path,
        {{"Authorization", "Bearer " + bearer_token()},
         {"User-Agent", "extremis/1.0"}});
    if (res.status != 200) raise_for_status(res, "fetching top posts of r/" + subreddit);
    return parse_post_listing(json::parse(res.body), subreddit, limit, now_utc());
}

SubmissionSet RedditClient::fetch_comments(const std::string& post_id) {
    const std::string path = "/comments/" + post_id + ".json?limit=500";
    HttpResponse res = transport_->get(
        "oauth.reddit.com", path,
        {{"Authorization", "Bearer " + bearer_token()},
         {"User-Agent", "extremis/1.0"}});
    if (res.status != 200) raise_for_status(res, "fetching comments of " + post_id);
    return parse_comment_response(json::parse(res.body), post_id, "", now_utc());
}

void apply_preprocess(SubmissionSet& set) {
    for (auto& s : set) {
        if (s.raw_text) continue;  // already prepared
        std::string original = s.text;
        s.text = preprocess(original).text;
        s.raw_text = std::move(original);
    }
}

}  // namespace extremis
