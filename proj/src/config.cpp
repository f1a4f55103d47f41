#include "extremis/config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace extremis {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            std::string item = trim(cur);
            if (!item.empty()) out.push_back(item);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string item = trim(cur);
    if (!item.empty()) out.push_back(item);
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("expected boolean, got '" + v + "'");
}

}  // namespace

double RunConfig::log_base_value() const {
    if (log_base == "e" || log_base.empty()) return 0.0;
    double b = std::stod(log_base);
    if (b <= 0.0 || b == 1.0)
        throw std::runtime_error("log_base must be 'e' or a positive number != 1");
    return b;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    RunConfig cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));

        if (key.rfind("flair.", 0) == 0) {
            std::string sub = key.substr(6);
            auto flairs = split_list(value, '|');
            if (sub.empty() || flairs.empty())
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": flair allow-list must be non-empty");
            cfg.flair_policy.allow[sub] =
                std::set<std::string>(flairs.begin(), flairs.end());
            continue;
        }

        if (key == "store") cfg.store_path = value;
        else if (key == "out") cfg.out_dir = value;
        else if (key == "fixtures") cfg.fixture_dir = value;
        else if (key == "subreddits") cfg.subreddits = split_list(value, ',');
        else if (key == "top_limit") cfg.top_limit = std::stoi(value);
        else if (key == "valence_lexicon") cfg.valence_lexicon = value;
        else if (key == "pattern_lexicon") cfg.pattern_lexicon = value;
        else if (key == "boosters") cfg.boosters = value;
        else if (key == "negators") cfg.negators = value;
        else if (key == "stopwords") cfg.stopwords = value;
        else if (key == "events") cfg.events = value;
        else if (key == "log_base") cfg.log_base = value;
        else if (key == "means_scope") {
            if (value == "corpus") cfg.means_scope = MeansScope::corpus;
            else if (value == "subreddit") cfg.means_scope = MeansScope::per_subreddit;
            else throw std::runtime_error("means_scope must be corpus|subreddit");
        }
        else if (key == "selectors") cfg.selectors = split_list(value, ',');
        else if (key == "cohorts") cfg.cohorts = split_list(value, ',');
        else if (key == "ma_window") cfg.ma_window = std::stoul(value);
        else if (key == "invert_subjectivity") cfg.invert_subjectivity = parse_bool(value);
        else if (key == "count_posts_only") cfg.count_posts_only = parse_bool(value);
        else if (key == "top_n_hist") cfg.top_n_hist = std::stoul(value);
        else if (key == "corpus_top_n") cfg.corpus_top_n = std::stoul(value);
        else if (key == "freq_k") cfg.freq_k = std::stoul(value);
        else if (key == "histogram_bins") cfg.histogram_bins = std::stoul(value);
        else if (key == "threads") cfg.threads = static_cast<unsigned>(std::stoul(value));
        else
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

void RunConfig::validate_files() const {
    for (const std::string* p : {&valence_lexicon, &pattern_lexicon, &boosters,
                                 &negators, &stopwords}) {
        if (!std::filesystem::exists(*p))
            throw std::runtime_error("referenced file does not exist: " + *p);
    }
}

void RunConfig::validate() const {
    if (ma_window < 1) throw std::runtime_error("ma_window must be >= 1");
    if (top_limit < 1) throw std::runtime_error("top_limit must be >= 1");
    log_base_value();  // throws on a bad base
}

}  // namespace extremis
