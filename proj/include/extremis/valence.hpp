#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "extremis/text.hpp"

namespace extremis {

// Token-level valence lexicon plus degree modifiers and negators.
// File formats:
//   lexicon  — UTF-8 TSV `token<TAB>valence` (further columns ignored),
//              `#` starts a comment line; valences must lie in [-4, 4].
//   boosters — one token per line, optionally followed by a signed
//              increment in [-1, 1]; omitted increments default to the
//              standard amplifier step (+0.293).
//   negators — one token per line.
struct ValenceLexicon {
    std::unordered_map<std::string, double> valences;
    std::unordered_map<std::string, double> boosters;
    std::unordered_set<std::string> negators;

    static ValenceLexicon load(const std::string& lexicon_path,
                               const std::string& boosters_path,
                               const std::string& negators_path);
};

struct ValenceScores {
    double neg = 0.0;
    double neu = 0.0;
    double pos = 0.0;
    double compound = 0.0;
};

// The anger score is the negative-proportion output.
inline double anger(const ValenceScores& v) { return v.neg; }

// Rule-based valence scorer. Stateless after construction; one engine
// may be shared by any number of concurrent callers.
//
// Rules applied per lexicon-matched token, over whitespace tokens with
// edge punctuation stripped (short tokens kept verbatim so emoticons
// survive): ALL-CAPS emphasis when the text mixes cased and ALL-CAPS
// tokens; booster increments from up to three preceding non-lexicon
// tokens, scaled down with distance; negation scaling when a negator
// sits in that window; clause reweighting around "but"; and !/?
// amplification of the total.
class ValenceEngine {
public:
    explicit ValenceEngine(ValenceLexicon lexicon) : lex_(std::move(lexicon)) {}

    ValenceScores score(const std::string& raw_text) const;

    const ValenceLexicon& lexicon() const { return lex_; }

    // Rule constants, fixed so results are bit-reproducible.
    static constexpr double kAllCapsIncrement = 0.733;
    static constexpr double kBoosterStep = 0.293;
    static constexpr double kNegationScalar = -0.74;
    static constexpr double kButPreWeight = 0.5;
    static constexpr double kButPostWeight = 1.5;
    static constexpr double kExclamationStep = 0.292;
    static constexpr int kMaxExclamations = 3;
    static constexpr double kQuestionStep = 0.18;
    static constexpr double kQuestionCap = 0.96;
    static constexpr double kAlpha = 15.0;

private:
    ValenceLexicon lex_;
};

}  // namespace extremis
