#pragma once

// The six quartile-fence tail-heaviness measures of a distribution: the
// probability mass it places beyond its own inner and outer fences, one side
// at a time plus the two-sided sums. Includes the comparison ordering and the
// built-in catalog of reference distributions.

#include <vector>

#include "heavytail/boxplot.hpp"
#include "heavytail/distribution.hpp"

namespace heavytail {

struct TailProfile {
    double mild_left = 0.0;
    double extreme_left = 0.0;
    double mild_right = 0.0;
    double extreme_right = 0.0;
    double mild_two = 0.0;
    double extreme_two = 0.0;
};

enum class Aspect {
    MildLeft,
    ExtremeLeft,
    MildRight,
    ExtremeRight,
    MildTwo,
    ExtremeTwo,
};

inline double profile_component(const TailProfile& p, Aspect a) {
    switch (a) {
        case Aspect::MildLeft: return p.mild_left;
        case Aspect::ExtremeLeft: return p.extreme_left;
        case Aspect::MildRight: return p.mild_right;
        case Aspect::ExtremeRight: return p.extreme_right;
        case Aspect::MildTwo: return p.mild_two;
        case Aspect::ExtremeTwo: return p.extreme_two;
    }
    throw domain_error("unknown tail aspect");
}

inline BoxPlotSummary theoretical_boxplot(const Distribution& d,
                                          const FenceConstants& fc = FenceConstants()) {
    return summary_from_quartiles(d.quantile(0.25), d.quantile(0.5),
                                  d.quantile(0.75), fc);
}

// All six measures by CDF composition; continuous laws, so P(X < t) = F(t).
inline TailProfile tail_profile(const Distribution& d,
                                const FenceConstants& fc = FenceConstants()) {
    const BoxPlotSummary s = theoretical_boxplot(d, fc);
    TailProfile p;
    p.extreme_left = d.cdf(s.outer_left);
    p.mild_left = d.cdf(s.inner_left) - p.extreme_left;
    p.extreme_right = 1.0 - d.cdf(s.outer_right);
    p.mild_right = (1.0 - d.cdf(s.inner_right)) - p.extreme_right;
    p.mild_two = p.mild_left + p.mild_right;
    p.extreme_two = p.extreme_left + p.extreme_right;
    return p;
}

enum class TailOrder { Lighter, EqualWithinTol, Heavier };

inline TailOrder lighter_than(const TailProfile& x, const TailProfile& y,
                              Aspect aspect, double tol = 1e-9) {
    const double dx = profile_component(x, aspect);
    const double dy = profile_component(y, aspect);
    if (std::fabs(dx - dy) <= tol)
        return TailOrder::EqualWithinTol;
    return dx < dy ? TailOrder::Lighter : TailOrder::Heavier;
}

struct CatalogEntry {
    Distribution model;
    TailProfile profile;
};

// The fixed roster of reference distributions with runtime-computed profiles.
inline std::vector<CatalogEntry> catalog(const FenceConstants& fc = FenceConstants()) {
    const std::vector<Distribution> roster = {
        dist::Uniform(0.0, 1.0),
        dist::Normal(0.0, 1.0),
        dist::Exponential(1.0),
        dist::NegExponential(1.0),
        dist::Gamma(2.0, 1.0),
        dist::Gamma(0.5, 1.0),
        dist::Gumbel(),
        dist::NegWeibull(2.0),
        dist::NegWeibull(1.0),
        dist::NegWeibull(0.5),
        dist::StudentT(2),
        dist::StudentT(1),
        dist::Frechet(2.0),
        dist::Frechet(1.0),
        dist::Frechet(0.5),
        dist::Pareto(2.0, 1.0),
        dist::Pareto(1.0, 1.0),
        dist::Pareto(0.5, 1.0),
    };
    std::vector<CatalogEntry> entries;
    entries.reserve(roster.size());
    for (const auto& model : roster)
        entries.push_back({model, tail_profile(model, fc)});
    return entries;
}

} // namespace heavytail
