#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "extremis/text.hpp"

namespace extremis {

struct PatternEntry {
    double polarity = 0.0;      // [-1, 1]
    double subjectivity = 0.0;  // [0, 1]
    double intensity = 1.0;     // > 0; modifier strength on a following word
};

// Word-form lexicon loaded from CSV `word,polarity,subjectivity,intensity`
// with a header row; duplicate words deduplicate last-wins, a missing or
// empty intensity field defaults to 1.0. Negators reuse negators.txt.
struct PatternLexicon {
    std::unordered_map<std::string, PatternEntry> entries;
    std::unordered_set<std::string> negators;

    static PatternLexicon load(const std::string& csv_path,
                               const std::string& negators_path);
};

struct PatternScores {
    double polarity = 0.0;
    double subjectivity = 0.0;
};

// Lexicon-averaging scorer: every matched token yields one assessment;
// a lexicon word immediately before a match scales its polarity by the
// modifier's intensity (clamped to [-1,1]) and an immediately preceding
// negator multiplies polarity by -0.5. Outputs are the arithmetic means
// of all assessments; no matches scores (0, 0).
class PatternEngine {
public:
    explicit PatternEngine(PatternLexicon lexicon) : lex_(std::move(lexicon)) {}

    PatternScores score(const std::string& clean_text) const;

    const PatternLexicon& lexicon() const { return lex_; }

    static constexpr double kNegationFactor = -0.5;

private:
    PatternLexicon lex_;
};

}  // namespace extremis
