#include "extremis/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "extremis/text.hpp"

namespace extremis {

const char* selector_name(Selector sel) {
    switch (sel) {
        case Selector::a: return "a";
        case Selector::abs_p: return "abs_p";
        case Selector::s: return "s";
        case Selector::inv_s: return "inv_s";
        case Selector::chi: return "chi";
        case Selector::chi_norm: return "chi_norm";
        case Selector::chi_l: return "chi_l";
        case Selector::chi_lu: return "chi_lu";
    }
    return "?";
}

std::optional<Selector> selector_from_name(const std::string& name) {
    if (name == "a") return Selector::a;
    if (name == "abs_p") return Selector::abs_p;
    if (name == "s") return Selector::s;
    if (name == "inv_s") return Selector::inv_s;
    if (name == "chi") return Selector::chi;
    if (name == "chi_norm") return Selector::chi_norm;
    if (name == "chi_l") return Selector::chi_l;
    if (name == "chi_lu") return Selector::chi_lu;
    return std::nullopt;
}

double selector_value(const ScoredSubmission& item, Selector sel) {
    switch (sel) {
        case Selector::a: return item.scores.a;
        case Selector::abs_p: return std::fabs(item.scores.p);
        case Selector::s: return item.scores.s;
        case Selector::inv_s: return 1.0 - item.scores.s;
        case Selector::chi: return item.chi;
        case Selector::chi_norm: return item.chi_norm;
        case Selector::chi_l: return item.chi_l;
        case Selector::chi_lu: return item.chi_lu;
    }
    return 0.0;
}

const char* label_name(Label l) {
    switch (l) {
        case Label::Extreme: return "Extreme";
        case Label::Moderate: return "Moderate";
        case Label::Neutral: return "Neutral";
    }
    return "?";
}

std::optional<Label> label_from_name(const std::string& name) {
    if (name == "Extreme") return Label::Extreme;
    if (name == "Moderate") return Label::Moderate;
    if (name == "Neutral") return Label::Neutral;
    return std::nullopt;
}

DailySeries daily_mean(const std::vector<ScoredSubmission>& items, Selector sel) {
    std::map<Day, std::pair<double, std::size_t>> acc;
    for (const auto& item : items) {
        if (item.excluded) continue;
        auto& slot = acc[day_of(item.submission.created_at)];
        slot.first += selector_value(item, sel);
        slot.second += 1;
    }
    DailySeries out;
    out.reserve(acc.size());
    for (const auto& [day, sum_count] : acc)
        out.push_back({day, sum_count.first / static_cast<double>(sum_count.second)});
    return out;
}

DailySeries daily_count(const std::vector<ScoredSubmission>& items, bool posts_only) {
    std::map<Day, std::size_t> acc;
    for (const auto& item : items) {
        if (item.excluded) continue;
        if (posts_only && !item.submission.is_post()) continue;
        acc[day_of(item.submission.created_at)] += 1;
    }
    DailySeries out;
    out.reserve(acc.size());
    for (const auto& [day, count] : acc)
        out.push_back({day, static_cast<double>(count)});
    return out;
}

DailySeries moving_average(const DailySeries& series, std::size_t window) {
    if (window < 1) throw ContractError("moving_average: window must be >= 1");
    DailySeries out;
    out.reserve(series.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        sum += series[i].value;
        if (i >= window) sum -= series[i - window].value;
        const std::size_t span = std::min(i + 1, window);
        out.push_back({series[i].day, sum / static_cast<double>(span)});
    }
    return out;
}

DailySeries running_mean(const DailySeries& series) {
    DailySeries out;
    out.reserve(series.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        sum += series[i].value;
        out.push_back({series[i].day, sum / static_cast<double>(i + 1)});
    }
    return out;
}

DailySeries deviation_from_mean(const DailySeries& series, double global_mean) {
    DailySeries out;
    out.reserve(series.size());
    for (const auto& pt : series) out.push_back({pt.day, pt.value - global_mean});
    return out;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw ContractError("pearson: length mismatch");
    if (xs.size() < 2) throw ContractError("pearson: need at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelationError();
    return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix correlation_matrix(const std::vector<ScoredSubmission>& items,
                                     const std::vector<Selector>& selectors) {
    std::vector<std::vector<double>> columns(selectors.size());
    for (const auto& item : items) {
        if (item.excluded) continue;
        for (std::size_t k = 0; k < selectors.size(); ++k)
            columns[k].push_back(selector_value(item, selectors[k]));
    }
    if (!columns.empty() && columns[0].size() < 2)
        throw ContractError("correlation_matrix: need at least 2 items");

    CorrelationMatrix m;
    m.selectors = selectors;
    m.r.assign(selectors.size(), std::vector<double>(selectors.size(), 0.0));
    m.defined.assign(selectors.size(), std::vector<bool>(selectors.size(), true));
    for (std::size_t i = 0; i < selectors.size(); ++i) {
        m.r[i][i] = 1.0;
        for (std::size_t j = i + 1; j < selectors.size(); ++j) {
            try {
                const double r = pearson(columns[i], columns[j]);
                m.r[i][j] = m.r[j][i] = r;
            } catch (const UndefinedCorrelationError&) {
                m.defined[i][j] = m.defined[j][i] = false;
            }
        }
    }
    return m;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

DescriptiveStats describe(std::vector<double> values) {
    if (values.empty()) throw ContractError("describe: empty input");
    std::sort(values.begin(), values.end());
    DescriptiveStats st;
    st.count = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    st.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - st.mean) * (v - st.mean);
        st.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    st.min = values.front();
    st.max = values.back();
    st.q25 = quantile_sorted(values, 0.25);
    st.median = quantile_sorted(values, 0.50);
    st.q75 = quantile_sorted(values, 0.75);
    return st;
}

std::vector<ScoredSubmission> top_n(const std::vector<ScoredSubmission>& items,
                                    Selector sel, std::size_t n) {
    std::vector<ScoredSubmission> out = items;
    auto cmp = [sel](const ScoredSubmission& lhs, const ScoredSubmission& rhs) {
        const double lv = selector_value(lhs, sel);
        const double rv = selector_value(rhs, sel);
        if (lv != rv) return lv > rv;
        return lhs.submission.id < rhs.submission.id;
    };
    if (n < out.size()) {
        std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n),
                          out.end(), cmp);
        out.resize(n);
    } else {
        std::sort(out.begin(), out.end(), cmp);
    }
    return out;
}

std::vector<ScoredSubmission> cohort(const std::vector<ScoredSubmission>& items,
                                     const std::string& keyword) {
    if (keyword.empty()) throw ContractError("cohort: empty keyword");
    const std::string needle = ascii_lower(keyword);
    std::vector<ScoredSubmission> out;
    for (const auto& item : items) {
        const auto tokens = tokenize_words(preprocess(item.submission.text).text);
        for (const auto& tok : tokens) {
            if (tok == needle) {
                out.push_back(item);
                break;
            }
        }
    }
    return out;
}

Histogram histogram(const std::vector<double>& values,
                    const std::vector<double>& edges) {
    if (edges.size() < 2) throw ContractError("histogram: need at least 2 edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] <= edges[i - 1])
            throw ContractError("histogram: edges must be ascending");
    Histogram h;
    h.edges = edges;
    h.counts.assign(edges.size() - 1, 0);
    for (double v : values) {
        if (v < edges.front() || v > edges.back()) {
            ++h.overflow;
            continue;
        }
        if (v == edges.back()) {
            ++h.counts.back();  // last bin is closed
            continue;
        }
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        ++h.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    }
    return h;
}

std::vector<LabelRow> label_stats(
    const std::vector<std::pair<Label, ScoredSubmission>>& labeled) {
    const Label order[] = {Label::Extreme, Label::Moderate, Label::Neutral};
    std::vector<LabelRow> rows;
    for (Label l : order) {
        LabelRow row;
        row.label = l;
        for (const auto& [label, item] : labeled) {
            if (label != l) continue;
            row.count += 1;
            row.mean_a += item.scores.a;
            row.mean_abs_p += std::fabs(item.scores.p);
            row.mean_s += item.scores.s;
            row.mean_chi_norm += item.chi_norm;
            row.mean_chi_l += item.chi_l;
        }
        if (row.count == 0) continue;
        const double n = static_cast<double>(row.count);
        row.mean_a /= n;
        row.mean_abs_p /= n;
        row.mean_s /= n;
        row.mean_chi_norm /= n;
        row.mean_chi_l /= n;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace extremis
