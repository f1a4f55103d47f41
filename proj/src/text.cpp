#include "extremis/text.hpp"

#include <cctype>

namespace extremis {

bool is_ascii_punct(unsigned char c) {
    return c < 0x80 && std::ispunct(c);
}

std::string ascii_lower(std::string s) {
    for (char& c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 0x80) c = static_cast<char>(std::tolower(u));
    }
    return s;
}

CleanText preprocess(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 0x80 && std::isspace(u)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += (u < 0x80) ? static_cast<char>(std::tolower(u)) : c;
    }
    CleanText ct;
    ct.text = std::move(out);
    ct.tombstone = ct.text.empty() || ct.text == "[deleted]" || ct.text == "[removed]";
    return ct;
}

namespace {

std::string strip_punct_if_word(const std::string& token) {
    size_t b = 0, e = token.size();
    while (b < e && is_ascii_punct(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && is_ascii_punct(static_cast<unsigned char>(token[e - 1]))) --e;
    if (e - b <= 2) return token;
    return token.substr(b, e - b);
}

}  // namespace

std::vector<std::string> tokenize_words(const std::string& text) {
    std::vector<std::string> tokens;
    size_t i = 0, n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i])) &&
               static_cast<unsigned char>(text[i]) < 0x80)
            ++i;
        size_t start = i;
        while (i < n && !(static_cast<unsigned char>(text[i]) < 0x80 &&
                          std::isspace(static_cast<unsigned char>(text[i]))))
            ++i;
        if (i > start) tokens.push_back(strip_punct_if_word(text.substr(start, i - start)));
    }
    return tokens;
}

bool token_all_caps(const std::string& tok) {
    bool has_alpha = false;
    for (char c : tok) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0x80) return false;
        if (std::isalpha(u)) {
            has_alpha = true;
            if (!std::isupper(u)) return false;
        }
    }
    return has_alpha;
}

bool has_cap_differential(const std::vector<std::string>& tokens) {
    size_t caps = 0;
    for (const auto& t : tokens)
        if (token_all_caps(t)) ++caps;
    return caps > 0 && caps < tokens.size();
}

std::size_t word_count(const std::string& clean_text) {
    std::size_t count = 0;
    size_t i = 0, n = clean_text.size();
    while (i < n) {
        while (i < n && clean_text[i] == ' ') ++i;
        size_t start = i;
        bool has_content = false;
        while (i < n && clean_text[i] != ' ') {
            if (!is_ascii_punct(static_cast<unsigned char>(clean_text[i]))) has_content = true;
            ++i;
        }
        if (i > start && has_content) ++count;
    }
    return count;
}

}  // namespace extremis
