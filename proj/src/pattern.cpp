#include "extremis/pattern.hpp"

#include <fstream>
#include <stdexcept>

#include "extremis/csv.hpp"

namespace extremis {

PatternLexicon PatternLexicon::load(const std::string& csv_path,
                                    const std::string& negators_path) {
    PatternLexicon lex;

    CsvReader reader(csv_path);
    std::vector<std::string> fields;
    if (!reader.next(fields) || fields.size() < 3 || fields[0] != "word")
        throw std::runtime_error(csv_path + ": expected header word,polarity,subjectivity,intensity");
    size_t lineno = 1;
    while (reader.next(fields)) {
        ++lineno;
        if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
        if (fields.size() < 3)
            throw std::runtime_error(csv_path + ":" + std::to_string(lineno) + ": short row");
        PatternEntry e;
        e.polarity = std::stod(fields[1]);
        e.subjectivity = std::stod(fields[2]);
        e.intensity = (fields.size() >= 4 && !fields[3].empty()) ? std::stod(fields[3]) : 1.0;
        if (e.polarity < -1.0 || e.polarity > 1.0 ||
            e.subjectivity < 0.0 || e.subjectivity > 1.0 || e.intensity <= 0.0)
            throw std::runtime_error(csv_path + ":" + std::to_string(lineno) +
                                     ": entry outside declared ranges");
        lex.entries[ascii_lower(fields[0])] = e;  // last wins
    }

    std::ifstream nin(negators_path);
    if (!nin) throw std::runtime_error("cannot open negators: " + negators_path);
    std::string line;
    while (std::getline(nin, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lex.negators.insert(ascii_lower(line));
    }
    return lex;
}

PatternScores PatternEngine::score(const std::string& clean_text) const {
    std::vector<std::string> tokens = tokenize_words(clean_text);

    double pol_sum = 0.0, subj_sum = 0.0;
    size_t assessments = 0;

    for (size_t i = 0; i < tokens.size(); ++i) {
        auto hit = lex_.entries.find(tokens[i]);
        if (hit == lex_.entries.end()) continue;
        double pol = hit->second.polarity;
        double subj = hit->second.subjectivity;
        if (i > 0) {
            auto prev = lex_.entries.find(tokens[i - 1]);
            if (prev != lex_.entries.end()) {
                pol *= prev->second.intensity;
                if (pol > 1.0) pol = 1.0;
                if (pol < -1.0) pol = -1.0;
            }
            if (lex_.negators.count(tokens[i - 1])) pol *= kNegationFactor;
        }
        pol_sum += pol;
        subj_sum += subj;
        ++assessments;
    }

    PatternScores out;
    if (assessments == 0) return out;
    out.polarity = pol_sum / static_cast<double>(assessments);
    out.subjectivity = subj_sum / static_cast<double>(assessments);
    return out;
}

}  // namespace extremis
