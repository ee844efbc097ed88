#pragma once

// The distribution zoo: CDF, quantile, support and inverse-transform sampling
// for every family the catalog, the estimators and the studies draw from.
// All quantiles are closed form except Normal and Gamma (monotone root
// finding on the CDF) and the Hill-Horror CDF (bisection on p).

#include <cctype>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "heavytail/errors.hpp"
#include "heavytail/special.hpp"

namespace heavytail {

struct SupportBounds {
    double lower; // may be -infinity
    double upper; // may be +infinity
};

namespace dist {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Uniform {
    double a, b;
    Uniform(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b))
            throw parameter_error("uniform: requires a < b");
    }
    double cdf(double x) const {
        if (x <= a) return 0.0;
        if (x >= b) return 1.0;
        return (x - a) / (b - a);
    }
    double quantile(double p) const { return a + p * (b - a); }
    SupportBounds support() const { return {a, b}; }
};

struct Normal {
    double mu, sigma2;
    Normal(double mu_, double sigma2_) : mu(mu_), sigma2(sigma2_) {
        if (!(sigma2 > 0.0))
            throw parameter_error("normal: variance must be positive");
    }
    double sigma() const { return std::sqrt(sigma2); }
    double cdf(double x) const { return normal_cdf((x - mu) / sigma()); }
    double quantile(double p) const { return mu + sigma() * normal_quantile(p); }
    SupportBounds support() const { return {-inf, inf}; }
};

struct Exponential {
    double rate;
    explicit Exponential(double rate_) : rate(rate_) {
        if (!(rate > 0.0))
            throw parameter_error("exponential: rate must be positive");
    }
    double cdf(double x) const { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); }
    double quantile(double p) const { return -std::log1p(-p) / rate; }
    SupportBounds support() const { return {0.0, inf}; }
};

// X = -Y with Y exponential: F(x) = exp(rate * x) for x <= 0.
struct NegExponential {
    double rate;
    explicit NegExponential(double rate_) : rate(rate_) {
        if (!(rate > 0.0))
            throw parameter_error("negexponential: rate must be positive");
    }
    double cdf(double x) const { return x >= 0.0 ? 1.0 : std::exp(rate * x); }
    double quantile(double p) const { return std::log(p) / rate; }
    SupportBounds support() const { return {-inf, 0.0}; }
};

struct Gamma {
    double shape, rate;
    Gamma(double shape_, double rate_) : shape(shape_), rate(rate_) {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw parameter_error("gamma: shape and rate must be positive");
    }
    double cdf(double x) const { return x <= 0.0 ? 0.0 : gamma_p(shape, rate * x); }
    double quantile(double p) const {
        double hi = std::max(1.0, shape) / rate;
        while (cdf(hi) < p)
            hi *= 2.0;
        return solve_monotone([this](double x) { return cdf(x); }, 0.0, hi, p);
    }
    SupportBounds support() const { return {0.0, inf}; }
};

struct Pareto {
    double alpha, scale;
    Pareto(double alpha_, double scale_) : alpha(alpha_), scale(scale_) {
        if (!(alpha > 0.0) || !(scale > 0.0))
            throw parameter_error("pareto: tail index and scale must be positive");
    }
    double cdf(double x) const {
        return x <= scale ? 0.0 : 1.0 - std::pow(x / scale, -alpha);
    }
    double quantile(double p) const { return scale * std::pow(1.0 - p, -1.0 / alpha); }
    SupportBounds support() const { return {scale, inf}; }
};

struct Frechet {
    double alpha;
    explicit Frechet(double alpha_) : alpha(alpha_) {
        if (!(alpha > 0.0))
            throw parameter_error("frechet: tail index must be positive");
    }
    double cdf(double x) const {
        return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -alpha));
    }
    double quantile(double p) const { return std::pow(-std::log(p), -1.0 / alpha); }
    SupportBounds support() const { return {0.0, inf}; }
};

struct Gumbel {
    double cdf(double x) const { return std::exp(-std::exp(-x)); }
    double quantile(double p) const { return -std::log(-std::log(p)); }
    SupportBounds support() const { return {-inf, inf}; }
};

// Reflected extreme-value Weibull: F(x) = exp(-(-x)^shape) for x <= 0.
struct NegWeibull {
    double shape;
    explicit NegWeibull(double shape_) : shape(shape_) {
        if (!(shape > 0.0))
            throw parameter_error("negweibull: shape must be positive");
    }
    double cdf(double x) const {
        return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, shape));
    }
    double quantile(double p) const { return -std::pow(-std::log(p), 1.0 / shape); }
    SupportBounds support() const { return {-inf, 0.0}; }
};

// Student t with 1 or 2 degrees of freedom; both CDFs are elementary.
struct StudentT {
    int dof;
    explicit StudentT(int dof_) : dof(dof_) {
        if (dof != 1 && dof != 2)
            throw parameter_error("studentt: degrees of freedom must be 1 or 2");
    }
    double cdf(double x) const {
        if (dof == 1)
            return 0.5 + std::atan(x) / std::numbers::pi_v<double>;
        return 0.5 + x / (2.0 * std::sqrt(2.0 + x * x));
    }
    double quantile(double p) const {
        if (dof == 1)
            return std::tan(std::numbers::pi_v<double> * (p - 0.5));
        return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));
    }
    SupportBounds support() const { return {-inf, inf}; }
};

// Defined by its quantile function (1-p)^{-1/alpha} * (-log(1-p)); the CDF
// has no closed form and is recovered by bisection on p.
struct HillHorror {
    double alpha;
    explicit HillHorror(double alpha_) : alpha(alpha_) {
        if (!(alpha > 0.0))
            throw parameter_error("hillhorror: tail index must be positive");
    }
    double quantile(double p) const {
        return std::pow(1.0 - p, -1.0 / alpha) * (-std::log1p(-p));
    }
    double cdf(double x) const {
        if (x <= 0.0)
            return 0.0;
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (quantile(mid) < x)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 1e-15)
                break;
        }
        return 0.5 * (lo + hi);
    }
    SupportBounds support() const { return {0.0, inf}; }
};

} // namespace dist

class Distribution {
public:
    using Model = std::variant<dist::Uniform, dist::Normal, dist::Exponential,
                               dist::NegExponential, dist::Gamma, dist::Pareto,
                               dist::Frechet, dist::Gumbel, dist::NegWeibull,
                               dist::StudentT, dist::HillHorror>;

    template <class M>
        requires std::constructible_from<Model, M>
    Distribution(M model) : model_(std::move(model)) {}

    double cdf(double x) const {
        return std::visit([x](const auto& m) { return m.cdf(x); }, model_);
    }

    double quantile(double p) const {
        if (!(p > 0.0 && p < 1.0))
            throw domain_error("quantile: p must lie in (0,1)");
        return std::visit([p](const auto& m) { return m.quantile(p); }, model_);
    }

    SupportBounds support() const {
        return std::visit([](const auto& m) { return m.support(); }, model_);
    }

    const Model& model() const { return model_; }

    std::string family() const;
    std::vector<double> params() const;
    std::string spec_string() const;

private:
    Model model_;
};

// count independent draws by inverse transform; the stream supplies uniforms
// strictly inside (0,1).
template <class Stream>
std::vector<double> sample(const Distribution& d, Stream& stream, std::size_t count) {
    if (count < 1)
        throw domain_error("sample: count must be at least 1");
    std::vector<double> draws;
    draws.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        draws.push_back(d.quantile(stream.next_unit()));
    return draws;
}

inline std::string Distribution::family() const {
    struct Visitor {
        std::string operator()(const dist::Uniform&) const { return "uniform"; }
        std::string operator()(const dist::Normal&) const { return "normal"; }
        std::string operator()(const dist::Exponential&) const { return "exponential"; }
        std::string operator()(const dist::NegExponential&) const { return "negexponential"; }
        std::string operator()(const dist::Gamma&) const { return "gamma"; }
        std::string operator()(const dist::Pareto&) const { return "pareto"; }
        std::string operator()(const dist::Frechet&) const { return "frechet"; }
        std::string operator()(const dist::Gumbel&) const { return "gumbel"; }
        std::string operator()(const dist::NegWeibull&) const { return "negweibull"; }
        std::string operator()(const dist::StudentT&) const { return "studentt"; }
        std::string operator()(const dist::HillHorror&) const { return "hillhorror"; }
    };
    return std::visit(Visitor{}, model_);
}

inline std::vector<double> Distribution::params() const {
    struct Visitor {
        std::vector<double> operator()(const dist::Uniform& m) const { return {m.a, m.b}; }
        std::vector<double> operator()(const dist::Normal& m) const { return {m.mu, m.sigma2}; }
        std::vector<double> operator()(const dist::Exponential& m) const { return {m.rate}; }
        std::vector<double> operator()(const dist::NegExponential& m) const { return {m.rate}; }
        std::vector<double> operator()(const dist::Gamma& m) const { return {m.shape, m.rate}; }
        std::vector<double> operator()(const dist::Pareto& m) const { return {m.alpha, m.scale}; }
        std::vector<double> operator()(const dist::Frechet& m) const { return {m.alpha}; }
        std::vector<double> operator()(const dist::Gumbel&) const { return {}; }
        std::vector<double> operator()(const dist::NegWeibull& m) const { return {m.shape}; }
        std::vector<double> operator()(const dist::StudentT& m) const {
            return {static_cast<double>(m.dof)};
        }
        std::vector<double> operator()(const dist::HillHorror& m) const { return {m.alpha}; }
    };
    return std::visit(Visitor{}, model_);
}

inline std::string Distribution::spec_string() const {
    const auto ps = params();
    if (ps.empty())
        return family();
    std::ostringstream out;
    out << family() << '(';
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0)
            out << ',';
        out << ps[i];
    }
    out << ')';
    return out.str();
}

namespace detail {

inline std::vector<double> parse_spec_params(const std::string& text,
                                             const std::string& spec) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw data_error("invalid number '" + token +
                             "' in distribution spec '" + spec + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size())
            throw data_error("invalid number '" + token +
                             "' in distribution spec '" + spec + "'");
        out.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// Parses "family(param1,param2)" spec strings, e.g. "pareto(1,1)", "gumbel",
// "t(2)". Case-insensitive; family aliases: exp, negexp, t.
inline Distribution parse_distribution(const std::string& spec) {
    std::string text;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
    if (text.empty())
        throw data_error("empty distribution spec");

    std::string name = text;
    std::vector<double> ps;
    const std::size_t open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')')
            throw data_error("unbalanced parentheses in distribution spec '" +
                             spec + "'");
        name = text.substr(0, open);
        const std::string inner = text.substr(open + 1, text.size() - open - 2);
        if (!inner.empty())
            ps = detail::parse_spec_params(inner, spec);
    }

    const auto arity = [&](std::size_t want) {
        if (ps.size() != want)
            throw data_error("distribution '" + name + "' expects " +
                             std::to_string(want) + " parameter(s), got " +
                             std::to_string(ps.size()));
    };

    if (name == "uniform") {
        arity(2);
        return dist::Uniform(ps[0], ps[1]);
    }
    if (name == "normal") {
        arity(2);
        return dist::Normal(ps[0], ps[1]);
    }
    if (name == "exponential" || name == "exp") {
        arity(1);
        return dist::Exponential(ps[0]);
    }
    if (name == "negexponential" || name == "negexp") {
        arity(1);
        return dist::NegExponential(ps[0]);
    }
    if (name == "gamma") {
        arity(2);
        return dist::Gamma(ps[0], ps[1]);
    }
    if (name == "pareto") {
        arity(2);
        return dist::Pareto(ps[0], ps[1]);
    }
    if (name == "frechet") {
        arity(1);
        return dist::Frechet(ps[0]);
    }
    if (name == "gumbel") {
        arity(0);
        return dist::Gumbel();
    }
    if (name == "negweibull") {
        arity(1);
        return dist::NegWeibull(ps[0]);
    }
    if (name == "studentt" || name == "t") {
        arity(1);
        if (ps[0] != 1.0 && ps[0] != 2.0)
            throw parameter_error("studentt: degrees of freedom must be 1 or 2");
        return dist::StudentT(static_cast<int>(ps[0]));
    }
    if (name == "hillhorror") {
        arity(1);
        return dist::HillHorror(ps[0]);
    }
    throw data_error("unknown distribution family '" + name + "'");
}

} // namespace heavytail
