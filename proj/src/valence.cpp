#include "extremis/valence.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace extremis {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

ValenceLexicon ValenceLexicon::load(const std::string& lexicon_path,
                                    const std::string& boosters_path,
                                    const std::string& negators_path) {
    ValenceLexicon lex;

    std::ifstream in(lexicon_path);
    if (!in) throw std::runtime_error("cannot open valence lexicon: " + lexicon_path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(lexicon_path + ":" + std::to_string(lineno) +
                                     ": expected token<TAB>valence");
        std::string token = ascii_lower(line.substr(0, tab));
        size_t tab2 = line.find('\t', tab + 1);
        std::string val_str = line.substr(tab + 1, tab2 == std::string::npos
                                                       ? std::string::npos
                                                       : tab2 - tab - 1);
        double v = std::stod(val_str);
        if (v < -4.0 || v > 4.0)
            throw std::runtime_error(lexicon_path + ":" + std::to_string(lineno) +
                                     ": valence outside [-4, 4]");
        lex.valences[token] = v;
    }

    std::ifstream bin(boosters_path);
    if (!bin) throw std::runtime_error("cannot open boosters: " + boosters_path);
    lineno = 0;
    while (std::getline(bin, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string token;
        double inc = ValenceEngine::kBoosterStep;
        ss >> token;
        if (!(ss >> inc)) inc = ValenceEngine::kBoosterStep;
        if (inc < -1.0 || inc > 1.0)
            throw std::runtime_error(boosters_path + ":" + std::to_string(lineno) +
                                     ": increment outside [-1, 1]");
        lex.boosters[ascii_lower(token)] = inc;
    }

    std::ifstream nin(negators_path);
    if (!nin) throw std::runtime_error("cannot open negators: " + negators_path);
    while (std::getline(nin, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        lex.negators.insert(ascii_lower(line));
    }

    return lex;
}

namespace {

double booster_contribution(const ValenceLexicon& lex, const std::string& token,
                            const std::string& token_lower, double valence,
                            bool cap_diff) {
    auto it = lex.boosters.find(token_lower);
    if (it == lex.boosters.end()) return 0.0;
    double scalar = it->second;
    if (valence < 0.0) scalar = -scalar;
    if (token_all_caps(token) && cap_diff) {
        if (valence > 0.0)
            scalar += ValenceEngine::kAllCapsIncrement;
        else
            scalar -= ValenceEngine::kAllCapsIncrement;
    }
    return scalar;
}

double punctuation_emphasis(const std::string& text) {
    int bangs = 0, qmarks = 0;
    for (char c : text) {
        if (c == '!') ++bangs;
        if (c == '?') ++qmarks;
    }
    if (bangs > ValenceEngine::kMaxExclamations) bangs = ValenceEngine::kMaxExclamations;
    double amp = bangs * ValenceEngine::kExclamationStep;
    if (qmarks > 1) {
        if (qmarks <= 3)
            amp += qmarks * ValenceEngine::kQuestionStep;
        else
            amp += ValenceEngine::kQuestionCap;
    }
    return amp;
}

}  // namespace

ValenceScores ValenceEngine::score(const std::string& raw_text) const {
    std::vector<std::string> tokens = tokenize_words(raw_text);
    const bool cap_diff = has_cap_differential(tokens);

    std::vector<std::string> lowered;
    lowered.reserve(tokens.size());
    for (const auto& t : tokens) lowered.push_back(ascii_lower(t));

    std::vector<double> sentiments(tokens.size(), 0.0);
    bool any_match = false;

    for (size_t i = 0; i < tokens.size(); ++i) {
        // Degree modifiers carry no valence of their own.
        if (lex_.boosters.count(lowered[i])) continue;
        auto hit = lex_.valences.find(lowered[i]);
        if (hit == lex_.valences.end()) continue;
        any_match = true;
        double valence = hit->second;

        if (token_all_caps(tokens[i]) && cap_diff) {
            if (valence > 0.0)
                valence += kAllCapsIncrement;
            else
                valence -= kAllCapsIncrement;
        }

        // Scan up to three preceding tokens. A token that is itself a
        // lexicon entry blocks modifier/negation effects at its distance.
        for (size_t dist = 1; dist <= 3 && dist <= i; ++dist) {
            size_t j = i - dist;
            if (lex_.valences.count(lowered[j])) continue;
            double s = booster_contribution(lex_, tokens[j], lowered[j], valence, cap_diff);
            if (dist == 2) s *= 0.95;
            if (dist == 3) s *= 0.9;
            valence += s;
            if (lex_.negators.count(lowered[j])) valence *= kNegationScalar;
        }

        sentiments[i] = valence;
    }

    ValenceScores out;
    if (!any_match) return out;

    // Contrastive-conjunction reweighting: the clause after "but" counts
    // for more.
    for (size_t i = 0; i < lowered.size(); ++i) {
        if (lowered[i] == "but") {
            for (size_t k = 0; k < sentiments.size(); ++k) {
                if (k < i)
                    sentiments[k] *= kButPreWeight;
                else if (k > i)
                    sentiments[k] *= kButPostWeight;
            }
            break;
        }
    }

    double total = 0.0;
    for (double s : sentiments) total += s;

    const double amp = punctuation_emphasis(raw_text);
    if (total > 0.0)
        total += amp;
    else if (total < 0.0)
        total -= amp;

    double compound = total / std::sqrt(total * total + kAlpha);
    if (compound < -1.0) compound = -1.0;
    if (compound > 1.0) compound = 1.0;
    out.compound = compound;

    double pos_sum = 0.0, neg_sum = 0.0;
    size_t neu_count = 0;
    for (double s : sentiments) {
        if (s > 0.0)
            pos_sum += s + 1.0;  // magnitude shift per contributing token
        else if (s < 0.0)
            neg_sum += s - 1.0;
        else
            ++neu_count;
    }
    if (pos_sum > std::fabs(neg_sum))
        pos_sum += amp;
    else if (pos_sum < std::fabs(neg_sum))
        neg_sum -= amp;

    const double norm = pos_sum + std::fabs(neg_sum) + static_cast<double>(neu_count);
    out.pos = std::fabs(pos_sum / norm);
    out.neg = std::fabs(neg_sum / norm);
    out.neu = std::fabs(static_cast<double>(neu_count) / norm);
    return out;
}

}  // namespace extremis
