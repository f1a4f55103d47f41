#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace extremis {

bool is_ascii_punct(unsigned char c);

std::string ascii_lower(std::string s);

// Lowercased, whitespace-collapsed body; tombstones are deletion
// markers ("[deleted]"/"[removed]") or empty bodies and are excluded
// from scoring downstream.
struct CleanText {
    std::string text;
    bool tombstone = false;
};

CleanText preprocess(const std::string& raw);

// Splits on whitespace and strips leading/trailing punctuation per
// token; tokens whose stripped form is <= 2 chars are kept verbatim so
// emoticons like ":)" survive.
std::vector<std::string> tokenize_words(const std::string& text);

// True when the token has at least one letter and no lowercase letters.
bool token_all_caps(const std::string& tok);

// True when some but not all tokens are ALL-CAPS.
bool has_cap_differential(const std::vector<std::string>& tokens);

// Whitespace tokens containing at least one non-punctuation character.
std::size_t word_count(const std::string& clean_text);

}  // namespace extremis
