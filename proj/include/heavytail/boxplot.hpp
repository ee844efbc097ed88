#pragma once

// Box-plot quartiles, IQR and the Tukey fences, shared by the theoretical
// (tail_measures) and empirical sides.

#include <cmath>

#include "heavytail/errors.hpp"

namespace heavytail {

// Fence multipliers plus the derived Frechet shape thresholds at which the
// Frechet law's left fences enter its positive support. Both thresholds are
// computed from the multipliers at construction: inner_left crosses zero when
// (log4 / log(4/3))^{-1/alpha} = k/(1+k) with k the mild multiplier, and
// outer_left when k is the extreme multiplier.
struct FenceConstants {
    double mild_multiplier = 1.5;
    double extreme_multiplier = 3.0;
    double c_mild_frechet;
    double c_extreme_frechet;

    explicit FenceConstants(double mild = 1.5, double extreme = 3.0)
        : mild_multiplier(mild), extreme_multiplier(extreme) {
        if (!(mild > 0.0) || !(extreme > mild))
            throw parameter_error(
                "fence constants: need 0 < mild_multiplier < extreme_multiplier");
        const double log_ratio = std::log(std::log(4.0) / std::log(4.0 / 3.0));
        c_mild_frechet = log_ratio / std::log((1.0 + mild) / mild);
        c_extreme_frechet = log_ratio / std::log((1.0 + extreme) / extreme);
    }
};

struct BoxPlotSummary {
    double q1, q2, q3;
    double iqr;
    double inner_left, outer_left, inner_right, outer_right;
};

inline BoxPlotSummary summary_from_quartiles(double q1, double q2, double q3,
                                             const FenceConstants& fc = FenceConstants()) {
    if (!(q1 <= q2 && q2 <= q3))
        throw domain_error("box plot: quartiles must be nondecreasing");
    BoxPlotSummary s;
    s.q1 = q1;
    s.q2 = q2;
    s.q3 = q3;
    s.iqr = q3 - q1;
    s.inner_left = q1 - fc.mild_multiplier * s.iqr;
    s.outer_left = q1 - fc.extreme_multiplier * s.iqr;
    s.inner_right = q3 + fc.mild_multiplier * s.iqr;
    s.outer_right = q3 + fc.extreme_multiplier * s.iqr;
    return s;
}

} // namespace heavytail
