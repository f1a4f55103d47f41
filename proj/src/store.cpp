#include "extremis/store.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace extremis {

LoadResult load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open store: " + path);
    LoadResult result;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Submission s;
        std::string err;
        if (submission_from_json_line(line, s, err))
            result.set.push_back(std::move(s));
        else
            result.warnings.push_back(std::to_string(lineno) + ": " + err);
    }
    return result;
}

void write_jsonl(const SubmissionSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write store: " + path);
    for (const auto& s : set)
        out << submission_to_json_line(s) << '\n';
}

void append_jsonl(const SubmissionSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot append to store: " + path);
    for (const auto& s : set)
        out << submission_to_json_line(s) << '\n';
}

SubmissionSet dedupe(const SubmissionSet& set) {
    std::unordered_map<std::string, size_t> first_pos;  // id -> slot in output
    SubmissionSet out;
    out.reserve(set.size());
    for (const auto& s : set) {
        auto it = first_pos.find(s.id);
        if (it == first_pos.end()) {
            first_pos.emplace(s.id, out.size());
            out.push_back(s);
        } else if (s.retrieved_at >= out[it->second].retrieved_at) {
            out[it->second] = s;
        }
    }
    return out;
}

FilterResult filter_by_flair(const SubmissionSet& set, const FlairPolicy& policy) {
    std::unordered_set<std::string> all_posts;
    std::unordered_set<std::string> kept_posts;
    for (const auto& s : set) {
        if (!s.is_post()) continue;
        all_posts.insert(s.id);
        if (policy.permits(s.subreddit, s.flair)) kept_posts.insert(s.id);
    }
    FilterResult result;
    for (const auto& s : set) {
        if (s.is_post()) {
            if (kept_posts.count(s.id)) result.set.push_back(s);
        } else if (all_posts.count(s.post_id)) {
            if (kept_posts.count(s.post_id)) result.set.push_back(s);
        } else {
            // Parent never collected; provenance unknown, keep it.
            result.set.push_back(s);
            ++result.orphan_comments_kept;
        }
    }
    return result;
}

}  // namespace extremis
