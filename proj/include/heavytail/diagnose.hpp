#pragma once

// Sample diagnosis against the reference catalog: box-plot statistics,
// outlier counts, Wilson confidence intervals for the four outlier
// frequencies, a ranked shortlist of compatible distributions, and tail-index
// estimates when the shortlist contains a heavy right tail.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "heavytail/boxplot.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/errors.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/special.hpp"
#include "heavytail/tail_measures.hpp"

namespace heavytail {

struct ProportionCI {
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double confidence = 0.0;
    std::size_t n = 0;
};

// Wilson score interval; stays informative at zero successes and always
// contains the observed proportion.
inline ProportionCI proportion_ci(std::size_t successes, std::size_t n,
                                  double confidence) {
    if (n < 1)
        throw domain_error("proportion_ci: n must be at least 1");
    if (successes > n)
        throw domain_error("proportion_ci: successes cannot exceed n");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw domain_error("proportion_ci: confidence must lie in (0,1)");

    const double z = normal_quantile(0.5 * (1.0 + confidence));
    const double nn = static_cast<double>(n);
    const double p_hat = static_cast<double>(successes) / nn;
    const double z2n = z * z / nn;
    const double center = (p_hat + 0.5 * z2n) / (1.0 + z2n);
    const double half = z *
        std::sqrt(p_hat * (1.0 - p_hat) / nn + 0.25 * z2n / nn) / (1.0 + z2n);

    ProportionCI ci;
    ci.point = p_hat;
    ci.lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
    ci.upper = successes == n ? 1.0 : std::min(1.0, center + half);
    ci.confidence = confidence;
    ci.n = n;
    return ci;
}

struct CompatibilityRecord {
    bool mild_left = false;
    bool extreme_left = false;
    bool mild_right = false;
    bool extreme_right = false;
    std::size_t compatible_count = 0;
    double total_abs_deviation = 0.0;
    // Median-centered, IQR-scaled quartile discrepancies (empirical minus
    // theoretical); descriptive only, the comparison is known to be fragile
    // for small samples.
    double shape_delta_q1 = 0.0;
    double shape_delta_q3 = 0.0;
};

struct ShortlistEntry {
    Distribution model;
    TailProfile profile;
    CompatibilityRecord compat;
};

struct DiagnosisReport {
    BoxPlotSummary boxplot;
    OutlierCounts counts;
    double confidence = 0.0;
    ProportionCI mild_left_ci, extreme_left_ci, mild_right_ci, extreme_right_ci;
    std::vector<ShortlistEntry> shortlist;
    bool estimates_triggered = false;
    std::vector<EstimateOutcome> estimates;
};

namespace detail {

inline bool ci_contains(const ProportionCI& ci, double value) {
    return ci.lower <= value && value <= ci.upper;
}

} // namespace detail

// Threshold on catalog extreme-right mass above which shortlisted entries are
// treated as heavy-right-tailed and the index estimators are run.
inline constexpr double heavy_right_trigger = 0.02;

// Entries compatible with at least this many of the four interval checks make
// the shortlist.
inline constexpr std::size_t shortlist_min_compatible = 3;

inline DiagnosisReport diagnose(const Sample& sample, double confidence,
                                const std::vector<CatalogEntry>& entries,
                                const FenceConstants& fc = FenceConstants()) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw domain_error("diagnose: confidence must lie in (0,1)");

    DiagnosisReport report;
    report.confidence = confidence;
    report.boxplot = empirical_boxplot(sample, fc);
    report.counts = count_outliers(sample, report.boxplot);

    const std::size_t n = sample.n();
    report.mild_left_ci = proportion_ci(report.counts.mild_left, n, confidence);
    report.extreme_left_ci = proportion_ci(report.counts.extreme_left, n, confidence);
    report.mild_right_ci = proportion_ci(report.counts.mild_right, n, confidence);
    report.extreme_right_ci =
        proportion_ci(report.counts.extreme_right, n, confidence);

    const double emp_iqr = report.boxplot.iqr;
    const double emp_q1_scaled =
        emp_iqr > 0.0 ? (report.boxplot.q1 - report.boxplot.q2) / emp_iqr : 0.0;
    const double emp_q3_scaled =
        emp_iqr > 0.0 ? (report.boxplot.q3 - report.boxplot.q2) / emp_iqr : 0.0;

    for (const CatalogEntry& entry : entries) {
        CompatibilityRecord rec;
        rec.mild_left = detail::ci_contains(report.mild_left_ci, entry.profile.mild_left);
        rec.extreme_left =
            detail::ci_contains(report.extreme_left_ci, entry.profile.extreme_left);
        rec.mild_right =
            detail::ci_contains(report.mild_right_ci, entry.profile.mild_right);
        rec.extreme_right =
            detail::ci_contains(report.extreme_right_ci, entry.profile.extreme_right);
        rec.compatible_count = static_cast<std::size_t>(rec.mild_left) +
                               static_cast<std::size_t>(rec.extreme_left) +
                               static_cast<std::size_t>(rec.mild_right) +
                               static_cast<std::size_t>(rec.extreme_right);
        rec.total_abs_deviation =
            std::fabs(entry.profile.mild_left - report.counts.mild_left_freq()) +
            std::fabs(entry.profile.extreme_left - report.counts.extreme_left_freq()) +
            std::fabs(entry.profile.mild_right - report.counts.mild_right_freq()) +
            std::fabs(entry.profile.extreme_right -
                      report.counts.extreme_right_freq());

        const BoxPlotSummary tb = theoretical_boxplot(entry.model, fc);
        rec.shape_delta_q1 = emp_q1_scaled - (tb.q1 - tb.q2) / tb.iqr;
        rec.shape_delta_q3 = emp_q3_scaled - (tb.q3 - tb.q2) / tb.iqr;

        if (rec.compatible_count >= shortlist_min_compatible)
            report.shortlist.push_back({entry.model, entry.profile, rec});
    }

    std::stable_sort(report.shortlist.begin(), report.shortlist.end(),
                     [](const ShortlistEntry& a, const ShortlistEntry& b) {
                         if (a.compat.compatible_count != b.compat.compatible_count)
                             return a.compat.compatible_count > b.compat.compatible_count;
                         return a.compat.total_abs_deviation <
                                b.compat.total_abs_deviation;
                     });

    for (const ShortlistEntry& entry : report.shortlist) {
        if (entry.profile.extreme_right > heavy_right_trigger) {
            report.estimates_triggered = true;
            break;
        }
    }
    if (report.estimates_triggered)
        report.estimates = estimate_all(sample, fc);
    return report;
}

inline DiagnosisReport diagnose(const Sample& sample, double confidence,
                                const FenceConstants& fc = FenceConstants()) {
    return diagnose(sample, confidence, catalog(fc), fc);
}

} // namespace heavytail
