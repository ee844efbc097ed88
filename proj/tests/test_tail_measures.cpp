#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "heavytail/tail_measures.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace heavytail;

namespace {

TailProfile profile_of(const Distribution& d) { return tail_profile(d); }

} // namespace

TEST_CASE("frechet fence thresholds") {
    const FenceConstants fc;
    CHECK_THAT(fc.c_mild_frechet, WithinRel(3.0784156285901138, 1e-12));
    CHECK_THAT(fc.c_extreme_frechet, WithinRel(5.466220297579006, 1e-12));
    // The left fences cross zero exactly at the thresholds.
    CHECK(theoretical_boxplot(dist::Frechet(3.0)).inner_left < 0.0);
    CHECK(theoretical_boxplot(dist::Frechet(3.2)).inner_left > 0.0);
    CHECK(theoretical_boxplot(dist::Frechet(5.4)).outer_left < 0.0);
    CHECK(theoretical_boxplot(dist::Frechet(5.5)).outer_left > 0.0);
}

TEST_CASE("custom fence multipliers are validated") {
    CHECK_NOTHROW(FenceConstants(1.0, 2.0));
    CHECK_THROWS_AS(FenceConstants(0.0, 3.0), parameter_error);
    CHECK_THROWS_AS(FenceConstants(2.0, 2.0), parameter_error);
    CHECK_THROWS_AS(FenceConstants(-1.0, 3.0), parameter_error);
}

TEST_CASE("exponential theoretical boxplot") {
    const BoxPlotSummary s = theoretical_boxplot(dist::Exponential(1.0));
    CHECK_THAT(s.q1, WithinRel(0.287682072451781, 1e-12));
    CHECK_THAT(s.q3, WithinRel(1.38629436111989, 1e-11));
    CHECK_THAT(s.outer_right, WithinRel(std::log(108.0), 1e-12));
    CHECK_THAT(s.inner_right, WithinRel(std::log(4.0) + 1.5 * std::log(3.0),
                                        1e-10));
}

TEST_CASE("bounded support families have null profiles where expected") {
    const TailProfile u = profile_of(dist::Uniform(0.0, 1.0));
    CHECK(u.mild_left == 0.0);
    CHECK(u.extreme_left == 0.0);
    CHECK(u.mild_right == 0.0);
    CHECK(u.extreme_right == 0.0);
    CHECK(u.mild_two == 0.0);
    CHECK(u.extreme_two == 0.0);

    const TailProfile e = profile_of(dist::Exponential(1.0));
    CHECK(e.mild_left == 0.0);
    CHECK(e.extreme_left == 0.0);
    const TailProfile w = profile_of(dist::NegWeibull(2.0));
    CHECK(w.mild_right == 0.0);
    CHECK(w.extreme_right == 0.0);
    const TailProfile p = profile_of(dist::Pareto(1.0, 1.0));
    CHECK(p.mild_left == 0.0);
    CHECK(p.extreme_left == 0.0);
    const TailProfile f = profile_of(dist::Frechet(1.0));
    CHECK(f.mild_left == 0.0);
    CHECK(f.extreme_left == 0.0);
}

TEST_CASE("normal profile") {
    const TailProfile p = profile_of(dist::Normal(0.0, 1.0));
    CHECK_THAT(p.mild_left, WithinRel(0.00348713064841, 1e-8));
    CHECK_THAT(p.extreme_left, WithinRel(1.17097123145e-06, 1e-8));
    CHECK_THAT(p.mild_right, WithinAbs(p.mild_left, 1e-14));
    CHECK_THAT(p.extreme_right, WithinAbs(p.extreme_left, 1e-16));
}

TEST_CASE("exponential profile") {
    const TailProfile p = profile_of(dist::Exponential(1.0));
    CHECK_THAT(p.mild_right, WithinRel(0.0388532631732, 1e-8));
    CHECK_THAT(p.extreme_right, WithinRel(1.0 / 108.0, 1e-12));
}

TEST_CASE("gamma profiles") {
    const TailProfile g2 = profile_of(dist::Gamma(2.0, 1.0));
    CHECK_THAT(g2.mild_right, WithinRel(0.028382729995, 1e-8));
    CHECK_THAT(g2.extreme_right, WithinRel(0.00333879323655, 1e-8));
    const TailProfile gh = profile_of(dist::Gamma(0.5, 1.0));
    CHECK_THAT(gh.mild_right, WithinRel(0.050135534169, 1e-8));
    CHECK_THAT(gh.extreme_right, WithinRel(0.0255145245231, 1e-8));
    CHECK(g2.mild_left == 0.0);
    CHECK(gh.extreme_left == 0.0);
}

TEST_CASE("gumbel profile") {
    const TailProfile p = profile_of(dist::Gumbel());
    CHECK_THAT(p.mild_left, WithinRel(4.27815529647e-07, 1e-8));
    CHECK_THAT(p.mild_right, WithinRel(0.024261543541, 1e-8));
    CHECK_THAT(p.extreme_right, WithinRel(0.00256759594377, 1e-8));
    CHECK(p.extreme_left < 1e-10);
}

TEST_CASE("negative weibull profiles") {
    const TailProfile w2 = profile_of(dist::NegWeibull(2.0));
    CHECK_THAT(w2.mild_left, WithinRel(0.0102368290942, 1e-8));
    CHECK_THAT(w2.extreme_left, WithinRel(6.68223818582e-05, 1e-8));
    const TailProfile w1 = profile_of(dist::NegWeibull(1.0));
    CHECK_THAT(w1.mild_left, WithinRel(0.0388532631732, 1e-8));
    CHECK_THAT(w1.extreme_left, WithinRel(1.0 / 108.0, 1e-12));
    const TailProfile wh = profile_of(dist::NegWeibull(0.5));
    CHECK_THAT(wh.mild_left, WithinRel(0.049545284965, 1e-8));
    CHECK_THAT(wh.extreme_left, WithinRel(0.0653860292891, 1e-8));
}

TEST_CASE("student t profiles") {
    const TailProfile t2 = profile_of(dist::StudentT(2));
    CHECK_THAT(t2.mild_right, WithinRel(0.026531203956, 1e-8));
    CHECK_THAT(t2.extreme_right, WithinRel(0.0146373283029, 1e-8));
    const TailProfile t1 = profile_of(dist::StudentT(1));
    CHECK_THAT(t1.mild_right, WithinRel(0.0328118950761, 1e-8));
    CHECK_THAT(t1.extreme_right, WithinRel(0.0451672353003, 1e-8));
    CHECK_THAT(t1.extreme_left, WithinAbs(0.5 - std::atan(7.0) / 3.141592653589793,
                                          1e-12));
    CHECK_THAT(t1.mild_left, WithinAbs(t1.mild_right, 1e-14));
    CHECK_THAT(t2.extreme_left, WithinAbs(t2.extreme_right, 1e-14));
}

TEST_CASE("frechet profiles") {
    const TailProfile f2 = profile_of(dist::Frechet(2.0));
    CHECK_THAT(f2.mild_right, WithinRel(0.042840111765, 1e-8));
    CHECK_THAT(f2.extreme_right, WithinRel(0.0406359878206, 1e-8));
    const TailProfile f1 = profile_of(dist::Frechet(1.0));
    CHECK_THAT(f1.mild_right, WithinRel(0.0415160037405, 1e-8));
    CHECK_THAT(f1.extreme_right, WithinRel(0.0816506982713, 1e-8));
    const TailProfile fh = profile_of(dist::Frechet(0.5));
    CHECK_THAT(fh.mild_right, WithinRel(0.0323158227765, 1e-8));
    CHECK_THAT(fh.extreme_right, WithinRel(0.136033905954, 1e-8));
}

TEST_CASE("pareto profiles") {
    const TailProfile p2 = profile_of(dist::Pareto(2.0, 1.0));
    CHECK_THAT(p2.mild_right, WithinRel(0.0450332618107, 1e-8));
    CHECK_THAT(p2.extreme_right, WithinRel(0.0486041515689, 1e-8));
    const TailProfile p1 = profile_of(dist::Pareto(1.0, 1.0));
    CHECK_THAT(p1.mild_right, WithinRel(1.0 / 24.0, 1e-12));
    CHECK_THAT(p1.extreme_right, WithinRel(1.0 / 12.0, 1e-12));
    const TailProfile ph = profile_of(dist::Pareto(0.5, 1.0));
    CHECK_THAT(ph.mild_right, WithinRel(0.0331051757102, 1e-8));
    CHECK_THAT(ph.extreme_right, WithinRel(0.130558241967, 1e-8));
}

TEST_CASE("two sided measures are the sums of the one sided parts") {
    for (const CatalogEntry& entry : catalog()) {
        CHECK(entry.profile.mild_two ==
              entry.profile.mild_left + entry.profile.mild_right);
        CHECK(entry.profile.extreme_two ==
              entry.profile.extreme_left + entry.profile.extreme_right);
    }
}

TEST_CASE("profiles are shift invariant") {
    const TailProfile a = profile_of(dist::Normal(0.0, 1.0));
    const TailProfile b = profile_of(dist::Normal(5.0, 1.0));
    CHECK_THAT(b.mild_left, WithinAbs(a.mild_left, 1e-12));
    CHECK_THAT(b.extreme_left, WithinAbs(a.extreme_left, 1e-12));
    CHECK_THAT(b.mild_right, WithinAbs(a.mild_right, 1e-12));
    CHECK_THAT(b.extreme_right, WithinAbs(a.extreme_right, 1e-12));
    const TailProfile u1 = profile_of(dist::Uniform(0.0, 2.0));
    const TailProfile u2 = profile_of(dist::Uniform(3.0, 5.0));
    CHECK_THAT(u2.mild_two, WithinAbs(u1.mild_two, 1e-12));
}

TEST_CASE("profiles are scale invariant within a family") {
    const TailProfile e1 = profile_of(dist::Exponential(1.0));
    const TailProfile e2 = profile_of(dist::Exponential(2.0));
    CHECK_THAT(e2.mild_right, WithinAbs(e1.mild_right, 1e-12));
    CHECK_THAT(e2.extreme_right, WithinAbs(e1.extreme_right, 1e-12));
    const TailProfile p1 = profile_of(dist::Pareto(1.0, 1.0));
    const TailProfile p5 = profile_of(dist::Pareto(1.0, 5.0));
    CHECK_THAT(p5.mild_right, WithinAbs(p1.mild_right, 1e-12));
    CHECK_THAT(p5.extreme_right, WithinAbs(p1.extreme_right, 1e-12));
    const TailProfile g1 = profile_of(dist::Gamma(2.0, 1.0));
    const TailProfile g9 = profile_of(dist::Gamma(2.0, 9.0));
    CHECK_THAT(g9.mild_right, WithinAbs(g1.mild_right, 1e-10));
}

TEST_CASE("ordering can flip between mild and extreme aspects") {
    const Distribution frechet_half = dist::Frechet(0.5);
    const Distribution pareto_half = dist::Pareto(0.5, 1.0);
    const TailProfile f = profile_of(frechet_half);
    const TailProfile p = profile_of(pareto_half);
    CHECK(lighter_than(f, p, Aspect::MildRight) == TailOrder::Lighter);
    CHECK(lighter_than(f, p, Aspect::ExtremeRight) == TailOrder::Heavier);
    CHECK(lighter_than(f, f, Aspect::ExtremeRight) == TailOrder::EqualWithinTol);
}

TEST_CASE("catalog roster") {
    const auto entries = catalog();
    REQUIRE(entries.size() == 18);
    CHECK(entries.front().model.family() == "uniform");
    CHECK(entries.back().model.spec_string() == "pareto(0.5,1)");
    for (const CatalogEntry& entry : entries) {
        const TailProfile fresh = tail_profile(entry.model);
        CHECK(entry.profile.mild_right == fresh.mild_right);
        CHECK(entry.profile.extreme_right == fresh.extreme_right);
    }
}

TEST_CASE("profile_component selects the right field") {
    TailProfile p;
    p.mild_left = 1.0;
    p.extreme_left = 2.0;
    p.mild_right = 3.0;
    p.extreme_right = 4.0;
    p.mild_two = 5.0;
    p.extreme_two = 6.0;
    CHECK(profile_component(p, Aspect::MildLeft) == 1.0);
    CHECK(profile_component(p, Aspect::ExtremeLeft) == 2.0);
    CHECK(profile_component(p, Aspect::MildRight) == 3.0);
    CHECK(profile_component(p, Aspect::ExtremeRight) == 4.0);
    CHECK(profile_component(p, Aspect::MildTwo) == 5.0);
    CHECK(profile_component(p, Aspect::ExtremeTwo) == 6.0);
}
