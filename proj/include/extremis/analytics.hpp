#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extremis/errors.hpp"
#include "extremis/extremism.hpp"
#include "extremis/time_util.hpp"

namespace extremis {

// Score stages addressable in series, statistics and exports.
enum class Selector { a, abs_p, s, inv_s, chi, chi_norm, chi_l, chi_lu };

const char* selector_name(Selector sel);
std::optional<Selector> selector_from_name(const std::string& name);
double selector_value(const ScoredSubmission& item, Selector sel);

struct DatePoint {
    Day day = 0;
    double value = 0.0;
};

// Date-indexed series; dates strictly increasing, gaps allowed.
using DailySeries = std::vector<DatePoint>;

struct DescriptiveStats {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample, n-1 denominator
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

struct Histogram {
    std::vector<double> edges;        // ascending
    std::vector<std::size_t> counts;  // |edges| - 1 bins
    std::size_t overflow = 0;         // values outside [front, back]
};

struct CorrelationMatrix {
    std::vector<Selector> selectors;
    std::vector<std::vector<double>> r;
    std::vector<std::vector<bool>> defined;
};

enum class Label { Extreme, Moderate, Neutral };

const char* label_name(Label l);
std::optional<Label> label_from_name(const std::string& name);

struct LabelRow {
    Label label = Label::Neutral;
    std::size_t count = 0;
    double mean_a = 0.0;
    double mean_abs_p = 0.0;
    double mean_s = 0.0;
    double mean_chi_norm = 0.0;
    double mean_chi_l = 0.0;
};

// Per-day arithmetic mean of the selected stage over non-excluded
// items; days with no items are absent.
DailySeries daily_mean(const std::vector<ScoredSubmission>& items, Selector sel);

// Per-day count of non-excluded submissions (posts and comments; pass
// posts_only to restrict).
DailySeries daily_count(const std::vector<ScoredSubmission>& items,
                        bool posts_only = false);

// Trailing mean over the last `window` points; partial windows at the
// start use the available prefix.
DailySeries moving_average(const DailySeries& series, std::size_t window = 7);

// Cumulative mean from the first day through each day.
DailySeries running_mean(const DailySeries& series);

DailySeries deviation_from_mean(const DailySeries& series, double global_mean);

// Sample Pearson correlation. Throws ContractError on length mismatch
// or fewer than 2 points, UndefinedCorrelationError on zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Symmetric with unit diagonal; undefined cells are flagged instead of
// propagating.
CorrelationMatrix correlation_matrix(const std::vector<ScoredSubmission>& items,
                                     const std::vector<Selector>& selectors);

// Quartiles by linear interpolation between order statistics.
DescriptiveStats describe(std::vector<double> values);

// The n highest by selector, descending; ties broken by id ascending.
std::vector<ScoredSubmission> top_n(const std::vector<ScoredSubmission>& items,
                                    Selector sel, std::size_t n);

// Items whose clean-text tokens contain the lowercased keyword as a
// whole token.
std::vector<ScoredSubmission> cohort(const std::vector<ScoredSubmission>& items,
                                     const std::string& keyword);

// Half-open bins [e_i, e_{i+1}), last bin closed; out-of-range values
// land in the overflow tally.
Histogram histogram(const std::vector<double>& values,
                    const std::vector<double>& edges);

// Per-label means of a, |p|, s, chi_norm, chi_l over labeled items
// (validation mode scores). Rows ordered Extreme, Moderate, Neutral;
// absent labels yield no row.
std::vector<LabelRow> label_stats(
    const std::vector<std::pair<Label, ScoredSubmission>>& labeled);

}  // namespace extremis
