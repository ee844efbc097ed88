#pragma once

// Five quartile/fence tail-index estimators. Each consumes the empirical
// quartiles, the outer right fence and the extreme-right outlier frequency;
// preconditions are enforced per method as structured errors so replication
// studies can tally rather than abort.

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "heavytail/boxplot.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/errors.hpp"

namespace heavytail {

enum class Method {
    ParFence,
    ParQuartile,
    FrechFence,
    FrechQuartile,
    HillHorrorQuartile,
};

inline constexpr Method all_methods[] = {
    Method::ParFence, Method::ParQuartile, Method::FrechFence,
    Method::FrechQuartile, Method::HillHorrorQuartile};

inline const char* method_name(Method m) {
    switch (m) {
        case Method::ParFence: return "par-fence";
        case Method::ParQuartile: return "par-quartile";
        case Method::FrechFence: return "frech-fence";
        case Method::FrechQuartile: return "frech-quartile";
        case Method::HillHorrorQuartile: return "hillhorror-quartile";
    }
    throw domain_error("unknown estimator method");
}

inline std::optional<Method> parse_method(const std::string& name) {
    for (Method m : all_methods)
        if (name == method_name(m))
            return m;
    return std::nullopt;
}

// The statistics every estimator reads.
struct EstimatorInputs {
    double q1 = 0.0;
    double q3 = 0.0;
    double outer_right = 0.0;
    double p_extreme_right = 0.0;
};

inline EstimatorInputs tail_stats(const Sample& sample,
                                  const FenceConstants& fc = FenceConstants()) {
    const BoxPlotSummary s = empirical_boxplot(sample, fc);
    const OutlierCounts c = count_outliers(sample, s);
    return {s.q1, s.q3, s.outer_right, c.extreme_right_freq()};
}

struct EstimateResult {
    Method method;
    double alpha_hat;
    EstimatorInputs inputs;
};

enum class EstimateFailure {
    NoExtremeRightOutliers, // p_eR = 0, fence methods undefined
    NonPositiveOuterFence,  // log of outer fence undefined
    UnitOuterFence,         // log of outer fence is zero
    NonPositiveQ1,          // log of Q1 undefined
    QuartilesNotIncreasing, // Q3 <= Q1, quartile-ratio denominators vanish
    SingularDenominator,    // adjusted Hill-Horror denominator is zero
};

inline const char* failure_message(EstimateFailure reason) {
    switch (reason) {
        case EstimateFailure::NoExtremeRightOutliers:
            return "no extreme right outliers in sample";
        case EstimateFailure::NonPositiveOuterFence:
            return "outer right fence is not positive";
        case EstimateFailure::UnitOuterFence:
            return "outer right fence equals 1 (log vanishes)";
        case EstimateFailure::NonPositiveQ1:
            return "first quartile is not positive";
        case EstimateFailure::QuartilesNotIncreasing:
            return "third quartile does not exceed first quartile";
        case EstimateFailure::SingularDenominator:
            return "adjusted quartile denominator is zero";
    }
    throw domain_error("unknown estimate failure reason");
}

// Stable identifiers for JSON reports and failure histograms.
inline const char* failure_key(EstimateFailure reason) {
    switch (reason) {
        case EstimateFailure::NoExtremeRightOutliers: return "no-extreme-right-outliers";
        case EstimateFailure::NonPositiveOuterFence: return "non-positive-outer-fence";
        case EstimateFailure::UnitOuterFence: return "unit-outer-fence";
        case EstimateFailure::NonPositiveQ1: return "non-positive-q1";
        case EstimateFailure::QuartilesNotIncreasing: return "quartiles-not-increasing";
        case EstimateFailure::SingularDenominator: return "singular-denominator";
    }
    throw domain_error("unknown estimate failure reason");
}

struct EstimateError {
    Method method;
    EstimateFailure reason;
    EstimatorInputs inputs;
};

using EstimateOutcome = std::variant<EstimateResult, EstimateError>;

struct estimator_error : error {
    estimator_error(Method m, EstimateFailure r)
        : error(std::string(method_name(m)) + ": " + failure_message(r)),
          method(m),
          reason(r) {}
    Method method;
    EstimateFailure reason;
};

/// Non-throwing core: applies one method to precomputed statistics.
inline EstimateOutcome try_estimate(Method method, const EstimatorInputs& in) {
    const auto fail = [&](EstimateFailure reason) {
        return EstimateOutcome(EstimateError{method, reason, in});
    };
    const auto ok = [&](double alpha) {
        return EstimateOutcome(EstimateResult{method, alpha, in});
    };

    switch (method) {
        case Method::ParFence:
        case Method::FrechFence: {
            if (in.p_extreme_right <= 0.0)
                return fail(EstimateFailure::NoExtremeRightOutliers);
            if (in.outer_right <= 0.0)
                return fail(EstimateFailure::NonPositiveOuterFence);
            const double log_or = std::log(in.outer_right);
            if (log_or == 0.0)
                return fail(EstimateFailure::UnitOuterFence);
            if (method == Method::ParFence)
                return ok(-std::log(in.p_extreme_right) / log_or);
            // Fence estimator matched to the Frechet law: inverts
            // F(O_R) = exp(-O_R^-alpha) through the survival mass beyond O_R.
            return ok(-std::log(-std::log1p(-in.p_extreme_right)) / log_or);
        }
        case Method::ParQuartile:
        case Method::FrechQuartile:
        case Method::HillHorrorQuartile: {
            if (in.q1 <= 0.0)
                return fail(EstimateFailure::NonPositiveQ1);
            if (!(in.q3 > in.q1))
                return fail(EstimateFailure::QuartilesNotIncreasing);
            const double log_q_ratio = std::log(in.q3) - std::log(in.q1);
            const double log_log4 = std::log(std::log(4.0));
            const double log_log43 = std::log(std::log(4.0 / 3.0));
            if (method == Method::ParQuartile)
                return ok(std::log(3.0) / log_q_ratio);
            if (method == Method::FrechQuartile)
                return ok((log_log4 - log_log43) / log_q_ratio);
            const double denom = log_q_ratio + log_log43 - log_log4;
            if (denom == 0.0)
                return fail(EstimateFailure::SingularDenominator);
            return ok(std::log(3.0) / denom);
        }
    }
    throw domain_error("unknown estimator method");
}

inline EstimateResult estimate(Method method, const Sample& sample,
                               const FenceConstants& fc = FenceConstants()) {
    EstimateOutcome outcome = try_estimate(method, tail_stats(sample, fc));
    if (const auto* err = std::get_if<EstimateError>(&outcome))
        throw estimator_error(err->method, err->reason);
    return std::get<EstimateResult>(outcome);
}

// All five methods on one sample, per-method failures inlined.
inline std::vector<EstimateOutcome> estimate_all(const Sample& sample,
                                                 const FenceConstants& fc = FenceConstants()) {
    const EstimatorInputs in = tail_stats(sample, fc);
    std::vector<EstimateOutcome> out;
    out.reserve(std::size(all_methods));
    for (Method m : all_methods)
        out.push_back(try_estimate(m, in));
    return out;
}

} // namespace heavytail
