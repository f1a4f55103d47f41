#include "extremis/submission.hpp"

#include <nlohmann/json.hpp>

namespace extremis {

using nlohmann::json;

const char* kind_name(Kind k) {
    return k == Kind::post ? "post" : "comment";
}

std::optional<Kind> kind_from_name(const std::string& s) {
    if (s == "post") return Kind::post;
    if (s == "comment") return Kind::comment;
    return std::nullopt;
}

bool FlairPolicy::permits(const std::string& subreddit,
                          const std::optional<std::string>& flair) const {
    auto it = allow.find(subreddit);
    if (it == allow.end()) return true;
    if (!flair) return false;
    return it->second.count(*flair) != 0;
}

std::string validate_submission(const Submission& s) {
    if (s.id.empty()) return "empty id";
    if (s.kind == Kind::post && s.post_id != s.id)
        return "post_id of a post must equal its id";
    if (s.kind == Kind::comment && s.post_id == s.id)
        return "post_id of a comment must differ from its id";
    if (s.retrieved_at < s.created_at)
        return "retrieved_at earlier than created_at";
    return {};
}

namespace {

const char* kRequired[] = {"id", "kind", "post_id", "subreddit",
                           "text", "upvotes", "created_at", "retrieved_at"};
const char* kOptional[] = {"title", "flair", "n_comments", "raw_text"};

bool known_key(const std::string& k) {
    for (const char* r : kRequired)
        if (k == r) return true;
    for (const char* o : kOptional)
        if (k == o) return true;
    return false;
}

}  // namespace

bool submission_from_json_line(const std::string& line, Submission& out, std::string& err) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        err = "not a JSON object";
        return false;
    }
    for (const char* key : kRequired) {
        if (!j.contains(key)) {
            err = std::string("missing required field '") + key + "'";
            return false;
        }
    }
    Submission s;
    try {
        s.id = j.at("id").get<std::string>();
        auto kind = kind_from_name(j.at("kind").get<std::string>());
        if (!kind) {
            err = "kind must be 'post' or 'comment'";
            return false;
        }
        s.kind = *kind;
        s.post_id = j.at("post_id").get<std::string>();
        s.subreddit = j.at("subreddit").get<std::string>();
        s.text = j.at("text").get<std::string>();
        s.upvotes = j.at("upvotes").get<std::int64_t>();
        auto created = parse_iso8601(j.at("created_at").get<std::string>());
        auto retrieved = parse_iso8601(j.at("retrieved_at").get<std::string>());
        if (!created || !retrieved) {
            err = "timestamps must be ISO-8601 UTC";
            return false;
        }
        s.created_at = *created;
        s.retrieved_at = *retrieved;
        if (j.contains("title")) s.title = j.at("title").get<std::string>();
        if (j.contains("flair")) s.flair = j.at("flair").get<std::string>();
        if (j.contains("raw_text")) s.raw_text = j.at("raw_text").get<std::string>();
        if (j.contains("n_comments")) {
            auto n = j.at("n_comments").get<std::int64_t>();
            if (n < 0) {
                err = "n_comments must be non-negative";
                return false;
            }
            s.n_comments = n;
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!known_key(it.key()))
                s.extra[it.key()] = it.value().dump();
        }
    } catch (const json::exception& e) {
        err = e.what();
        return false;
    }
    std::string invariant = validate_submission(s);
    if (!invariant.empty()) {
        err = invariant;
        return false;
    }
    out = std::move(s);
    return true;
}

std::string submission_to_json_line(const Submission& s) {
    json j;
    j["id"] = s.id;
    j["kind"] = kind_name(s.kind);
    j["post_id"] = s.post_id;
    j["subreddit"] = s.subreddit;
    j["text"] = s.text;
    j["upvotes"] = s.upvotes;
    j["created_at"] = format_iso8601(s.created_at);
    j["retrieved_at"] = format_iso8601(s.retrieved_at);
    if (s.title) j["title"] = *s.title;
    if (s.flair) j["flair"] = *s.flair;
    if (s.raw_text) j["raw_text"] = *s.raw_text;
    if (s.n_comments) j["n_comments"] = *s.n_comments;
    for (const auto& [k, v] : s.extra)
        j[k] = json::parse(v);
    return j.dump();
}

}  // namespace extremis
