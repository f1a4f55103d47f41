#include "extremis/textstats.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "extremis/text.hpp"

namespace extremis {

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword list: " + path);
    StopwordSet out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.insert(ascii_lower(line));
    }
    return out;
}

std::vector<std::string> clean_tokens(const std::string& clean_text,
                                      const StopwordSet& stopwords) {
    std::string stripped;
    stripped.reserve(clean_text.size());
    for (char c : clean_text) {
        if (is_ascii_punct(static_cast<unsigned char>(c))) continue;
        stripped += c;
    }
    std::vector<std::string> out;
    size_t i = 0, n = stripped.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(stripped[i])) &&
               static_cast<unsigned char>(stripped[i]) < 0x80)
            ++i;
        size_t start = i;
        while (i < n && !(static_cast<unsigned char>(stripped[i]) < 0x80 &&
                          std::isspace(static_cast<unsigned char>(stripped[i]))))
            ++i;
        if (i > start) {
            std::string tok = stripped.substr(start, i - start);
            if (!stopwords.count(tok)) out.push_back(std::move(tok));
        }
    }
    return out;
}

FreqTable count_tokens(const std::vector<std::string>& tokens) {
    FreqTable t;
    for (const auto& tok : tokens) {
        if (tok.empty()) continue;
        ++t.counts[tok];
        ++t.total;
    }
    return t;
}

FreqTable build_corpus(const std::vector<ScoredSubmission>& items, Selector sel,
                       std::size_t n, const StopwordSet& stopwords) {
    FreqTable t;
    for (const auto& item : top_n(items, sel, n)) {
        for (auto& tok : clean_tokens(preprocess(item.submission.text).text, stopwords)) {
            ++t.counts[tok];
            ++t.total;
        }
    }
    return t;
}

double jaccard(const FreqTable& a, const FreqTable& b) {
    if (a.counts.empty() && b.counts.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& [tok, count] : a.counts)
        if (b.counts.count(tok)) ++inter;
    const std::size_t uni = a.counts.size() + b.counts.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<std::vector<double>> jaccard_matrix(
    const std::vector<std::pair<std::string, FreqTable>>& tables) {
    if (tables.size() < 2) throw ContractError("jaccard_matrix: need at least 2 tables");
    std::set<std::string> names;
    for (const auto& [name, table] : tables)
        if (!names.insert(name).second)
            throw ContractError("jaccard_matrix: duplicate table name '" + name + "'");

    std::vector<std::vector<double>> m(tables.size(),
                                       std::vector<double>(tables.size(), 0.0));
    for (std::size_t i = 0; i < tables.size(); ++i) {
        m[i][i] = tables[i].second.counts.empty() ? 0.0 : 1.0;
        for (std::size_t j = i + 1; j < tables.size(); ++j)
            m[i][j] = m[j][i] = jaccard(tables[i].second, tables[j].second);
    }
    return m;
}

std::vector<std::pair<std::string, std::int64_t>> export_frequencies(
    const FreqTable& table, std::size_t k) {
    std::vector<std::pair<std::string, std::int64_t>> ranked(table.counts.begin(),
                                                             table.counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second) return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });
    if (k < ranked.size()) ranked.resize(k);
    return ranked;
}

}  // namespace extremis
