#pragma once

// Rendering for the CLI: JSON documents (full precision, schema-stable) and
// aligned text views (6 significant digits; probabilities in decimal down to
// 1e-7, scientific below). Both carry the same numeric content.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "heavytail/diagnose.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/montecarlo.hpp"
#include "heavytail/tail_measures.hpp"

namespace heavytail::render {

using ordered_json = nlohmann::ordered_json;

inline std::string format_significant(double value, int digits = 6) {
    std::ostringstream out;
    out << std::defaultfloat << std::setprecision(digits) << value;
    return out.str();
}

namespace detail {

inline std::string strip_trailing_zeros(std::string s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos)
        return s;
    auto last = s.find_last_not_of('0');
    if (s[last] == '.')
        --last;
    s.erase(last + 1);
    return s;
}

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

} // namespace detail

// Decimal notation down to 1e-7, scientific below; 6 significant digits.
inline std::string format_probability(double p) {
    if (p == 0.0)
        return "0";
    if (!(p > 0.0) || !std::isfinite(p))
        return format_significant(p);
    if (p < 1e-7) {
        std::ostringstream out;
        out << std::scientific << std::setprecision(5) << p;
        std::string s = out.str();
        const auto e = s.find('e');
        return detail::strip_trailing_zeros(s.substr(0, e)) + s.substr(e);
    }
    const int exponent = static_cast<int>(std::floor(std::log10(p)));
    const int decimals = std::max(0, 5 - exponent);
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << p;
    return detail::strip_trailing_zeros(out.str());
}

// ---- tail profiles and the catalog ----

inline ordered_json profile_json(const TailProfile& p) {
    ordered_json j;
    j["mild_left"] = p.mild_left;
    j["extreme_left"] = p.extreme_left;
    j["mild_right"] = p.mild_right;
    j["extreme_right"] = p.extreme_right;
    j["mild_two"] = p.mild_two;
    j["extreme_two"] = p.extreme_two;
    return j;
}

inline ordered_json measures_json(const Distribution& d, const TailProfile& p) {
    ordered_json j;
    j["dist"] = d.spec_string();
    j["measures"] = profile_json(p);
    return j;
}

inline std::string measures_text(const Distribution& d, const TailProfile& p) {
    std::ostringstream out;
    out << "distribution: " << d.spec_string() << "\n";
    const std::pair<const char*, double> rows[] = {
        {"p_mL", p.mild_left},  {"p_eL", p.extreme_left},
        {"p_mR", p.mild_right}, {"p_eR", p.extreme_right},
        {"p_m2", p.mild_two},   {"p_e2", p.extreme_two},
    };
    for (const auto& [label, value] : rows)
        out << detail::pad(label, 6) << format_probability(value) << "\n";
    return out.str();
}

inline ordered_json catalog_json(const std::vector<CatalogEntry>& entries) {
    ordered_json j = ordered_json::array();
    for (const CatalogEntry& entry : entries)
        j.push_back(measures_json(entry.model, entry.profile));
    return j;
}

inline std::string catalog_text(const std::vector<CatalogEntry>& entries) {
    constexpr std::size_t name_width = 18;
    constexpr std::size_t col_width = 16;
    std::ostringstream out;
    out << detail::pad("distribution", name_width);
    for (const char* label : {"p_mL", "p_eL", "p_mR", "p_eR", "p_m2", "p_e2"})
        out << detail::pad(label, col_width);
    out << "\n";
    for (const CatalogEntry& entry : entries) {
        out << detail::pad(entry.model.spec_string(), name_width);
        const TailProfile& p = entry.profile;
        for (double v : {p.mild_left, p.extreme_left, p.mild_right,
                         p.extreme_right, p.mild_two, p.extreme_two})
            out << detail::pad(format_probability(v), col_width);
        out << "\n";
    }
    return out.str();
}

// ---- box plots and outlier counts ----

inline ordered_json boxplot_json(const BoxPlotSummary& s) {
    ordered_json j;
    j["q1"] = s.q1;
    j["q2"] = s.q2;
    j["q3"] = s.q3;
    j["iqr"] = s.iqr;
    j["inner_left"] = s.inner_left;
    j["outer_left"] = s.outer_left;
    j["inner_right"] = s.inner_right;
    j["outer_right"] = s.outer_right;
    return j;
}

inline std::string boxplot_block(const BoxPlotSummary& s,
                                 const std::string& indent = "") {
    std::ostringstream out;
    const std::pair<const char*, double> rows[] = {
        {"q1", s.q1},
        {"q2", s.q2},
        {"q3", s.q3},
        {"iqr", s.iqr},
        {"inner_left", s.inner_left},
        {"outer_left", s.outer_left},
        {"inner_right", s.inner_right},
        {"outer_right", s.outer_right},
    };
    for (const auto& [label, value] : rows)
        out << indent << detail::pad(label, 13) << format_significant(value) << "\n";
    return out.str();
}

// One-line sketch spanning the outer fences: < > outer fences, | inner
// fences, === box between the quartiles, M median.
inline std::string boxplot_sketch(const BoxPlotSummary& s) {
    const double span = s.outer_right - s.outer_left;
    if (!(span > 0.0) || !std::isfinite(span))
        return "";
    constexpr int columns = 60;
    const auto pos = [&](double x) {
        const double r = (x - s.outer_left) / span * columns;
        return std::min(columns, std::max(0, static_cast<int>(std::lround(r))));
    };
    std::string line(columns + 1, ' ');
    for (int i = pos(s.inner_left); i <= pos(s.q1); ++i)
        line[i] = '.';
    for (int i = pos(s.q3); i <= pos(s.inner_right); ++i)
        line[i] = '.';
    for (int i = pos(s.q1); i <= pos(s.q3); ++i)
        line[i] = '=';
    line[pos(s.q2)] = 'M';
    line[pos(s.inner_left)] = '|';
    line[pos(s.inner_right)] = '|';
    line[0] = '<';
    line[columns] = '>';
    return line;
}

inline std::string boxplot_text(const BoxPlotSummary& s, std::size_t n) {
    std::ostringstream out;
    out << detail::pad("n", 13) << n << "\n";
    out << boxplot_block(s);
    const std::string sketch = boxplot_sketch(s);
    if (!sketch.empty())
        out << sketch << "\n";
    return out.str();
}

inline ordered_json outliers_json(const OutlierCounts& c) {
    ordered_json j;
    j["n"] = c.n;
    j["mild_left"] = c.mild_left;
    j["extreme_left"] = c.extreme_left;
    j["mild_right"] = c.mild_right;
    j["extreme_right"] = c.extreme_right;
    j["total"] = c.total();
    ordered_json freq;
    freq["mild_left"] = c.mild_left_freq();
    freq["extreme_left"] = c.extreme_left_freq();
    freq["mild_right"] = c.mild_right_freq();
    freq["extreme_right"] = c.extreme_right_freq();
    j["frequencies"] = std::move(freq);
    return j;
}

inline std::string outliers_text(const OutlierCounts& c) {
    std::ostringstream out;
    out << detail::pad("n", 15) << c.n << "\n";
    const std::tuple<const char*, std::size_t, double> rows[] = {
        {"mild_left", c.mild_left, c.mild_left_freq()},
        {"extreme_left", c.extreme_left, c.extreme_left_freq()},
        {"mild_right", c.mild_right, c.mild_right_freq()},
        {"extreme_right", c.extreme_right, c.extreme_right_freq()},
    };
    for (const auto& [label, count, freq] : rows)
        out << detail::pad(label, 15) << detail::pad(std::to_string(count), 8)
            << "freq " << format_probability(freq) << "\n";
    out << detail::pad("total", 15) << c.total() << "\n";
    return out.str();
}

// ---- estimates ----

inline ordered_json estimates_json(const std::vector<EstimateOutcome>& outcomes) {
    ordered_json j;
    if (outcomes.empty())
        throw domain_error("estimates_json: no outcomes");
    const EstimatorInputs& in = std::visit(
        [](const auto& o) -> const EstimatorInputs& { return o.inputs; },
        outcomes.front());
    ordered_json inputs;
    inputs["q1"] = in.q1;
    inputs["q3"] = in.q3;
    inputs["outer_right"] = in.outer_right;
    inputs["p_extreme_right"] = in.p_extreme_right;
    j["inputs"] = std::move(inputs);
    ordered_json list = ordered_json::array();
    for (const EstimateOutcome& outcome : outcomes) {
        ordered_json e;
        if (const auto* res = std::get_if<EstimateResult>(&outcome)) {
            e["method"] = method_name(res->method);
            e["alpha"] = res->alpha_hat;
            e["failure"] = nullptr;
        } else {
            const auto& err = std::get<EstimateError>(outcome);
            e["method"] = method_name(err.method);
            e["alpha"] = nullptr;
            e["failure"] = failure_key(err.reason);
        }
        list.push_back(std::move(e));
    }
    j["estimates"] = std::move(list);
    return j;
}

inline std::string estimates_text(const std::vector<EstimateOutcome>& outcomes) {
    if (outcomes.empty())
        throw domain_error("estimates_text: no outcomes");
    const EstimatorInputs& in = std::visit(
        [](const auto& o) -> const EstimatorInputs& { return o.inputs; },
        outcomes.front());
    std::ostringstream out;
    out << "inputs: q1 " << format_significant(in.q1) << ", q3 "
        << format_significant(in.q3) << ", outer_right "
        << format_significant(in.outer_right) << ", p_eR "
        << format_probability(in.p_extreme_right) << "\n";
    for (const EstimateOutcome& outcome : outcomes) {
        if (const auto* res = std::get_if<EstimateResult>(&outcome)) {
            out << detail::pad(method_name(res->method), 22)
                << format_significant(res->alpha_hat) << "\n";
        } else {
            const auto& err = std::get<EstimateError>(outcome);
            out << detail::pad(method_name(err.method), 22) << "failed: "
                << failure_message(err.reason) << "\n";
        }
    }
    return out.str();
}

// ---- replication studies ----

inline std::string study_text(const StudyReport& report) {
    constexpr std::size_t dist_width = 18;
    constexpr std::size_t n_width = 7;
    constexpr std::size_t num_width = 11;
    const std::size_t pair_width = 2 * num_width;
    std::ostringstream out;
    out << "replications " << report.config.replications << ", seed "
        << report.config.master_seed << "\n";
    out << std::string(dist_width + n_width, ' ');
    for (Method m : report.config.methods)
        out << detail::pad(method_name(m), pair_width);
    out << "\n";
    out << detail::pad("dist", dist_width) << detail::pad("n", n_width);
    for (std::size_t i = 0; i < report.config.methods.size(); ++i)
        out << detail::pad("mean", num_width) << detail::pad("sd", num_width);
    out << "\n";
    for (const CellReport& cell : report.cells) {
        out << detail::pad(cell.cell.model.spec_string(), dist_width)
            << detail::pad(std::to_string(cell.cell.n), n_width);
        for (const MethodSummary& s : cell.methods) {
            out << detail::pad(s.mean ? format_significant(*s.mean) : "-", num_width)
                << detail::pad(s.sd ? format_significant(*s.sd) : "-", num_width);
        }
        out << "\n";
        bool any_failures = false;
        for (const MethodSummary& s : cell.methods)
            any_failures = any_failures || s.failure_count > 0;
        if (any_failures) {
            out << "  failures:";
            for (const MethodSummary& s : cell.methods)
                if (s.failure_count > 0)
                    out << " " << method_name(s.method) << "=" << s.failure_count
                        << "/" << report.config.replications;
            out << "\n";
        }
    }
    return out.str();
}

// ---- diagnosis ----

inline ordered_json proportion_ci_json(const ProportionCI& ci) {
    ordered_json j;
    j["point"] = ci.point;
    j["lower"] = ci.lower;
    j["upper"] = ci.upper;
    return j;
}

inline ordered_json diagnosis_json(const DiagnosisReport& report) {
    ordered_json j;
    j["n"] = report.counts.n;
    j["confidence"] = report.confidence;
    j["boxplot"] = boxplot_json(report.boxplot);
    j["counts"] = outliers_json(report.counts);
    ordered_json intervals;
    intervals["mild_left"] = proportion_ci_json(report.mild_left_ci);
    intervals["extreme_left"] = proportion_ci_json(report.extreme_left_ci);
    intervals["mild_right"] = proportion_ci_json(report.mild_right_ci);
    intervals["extreme_right"] = proportion_ci_json(report.extreme_right_ci);
    j["intervals"] = std::move(intervals);
    ordered_json shortlist = ordered_json::array();
    for (const ShortlistEntry& entry : report.shortlist) {
        ordered_json e;
        e["dist"] = entry.model.spec_string();
        e["profile"] = profile_json(entry.profile);
        ordered_json compatible;
        compatible["mild_left"] = entry.compat.mild_left;
        compatible["extreme_left"] = entry.compat.extreme_left;
        compatible["mild_right"] = entry.compat.mild_right;
        compatible["extreme_right"] = entry.compat.extreme_right;
        e["compatible"] = std::move(compatible);
        e["compatible_count"] = entry.compat.compatible_count;
        e["total_abs_deviation"] = entry.compat.total_abs_deviation;
        e["shape_delta_q1"] = entry.compat.shape_delta_q1;
        e["shape_delta_q3"] = entry.compat.shape_delta_q3;
        shortlist.push_back(std::move(e));
    }
    j["shortlist"] = std::move(shortlist);
    j["estimates_triggered"] = report.estimates_triggered;
    if (report.estimates_triggered)
        j["estimates"] = estimates_json(report.estimates);
    else
        j["estimates"] = nullptr;
    return j;
}

inline std::string diagnosis_text(const DiagnosisReport& report) {
    std::ostringstream out;
    out << "diagnosis at confidence " << format_significant(report.confidence)
        << " (n = " << report.counts.n << ")\n\n";
    out << "box-plot\n" << boxplot_block(report.boxplot, "  ");
    const std::string sketch = boxplot_sketch(report.boxplot);
    if (!sketch.empty())
        out << "  " << sketch << "\n";
    out << "\noutlier frequencies\n";
    out << "  " << detail::pad("measure", 15) << detail::pad("count", 8)
        << detail::pad("freq", 14) << detail::pad("ci_lower", 14)
        << detail::pad("ci_upper", 14) << "\n";
    const std::tuple<const char*, std::size_t, const ProportionCI*> rows[] = {
        {"mild_left", report.counts.mild_left, &report.mild_left_ci},
        {"extreme_left", report.counts.extreme_left, &report.extreme_left_ci},
        {"mild_right", report.counts.mild_right, &report.mild_right_ci},
        {"extreme_right", report.counts.extreme_right, &report.extreme_right_ci},
    };
    for (const auto& [label, count, ci] : rows)
        out << "  " << detail::pad(label, 15)
            << detail::pad(std::to_string(count), 8)
            << detail::pad(format_probability(ci->point), 14)
            << detail::pad(format_probability(ci->lower), 14)
            << detail::pad(format_probability(ci->upper), 14) << "\n";
    out << "\nshortlist (compatible on at least " << shortlist_min_compatible
        << " of 4 measures)\n";
    if (report.shortlist.empty()) {
        out << "  no catalog entry is compatible\n";
    } else {
        out << "  " << detail::pad("rank", 6) << detail::pad("distribution", 18)
            << detail::pad("compatible", 12) << detail::pad("total_dev", 12)
            << detail::pad("q1_delta", 12) << detail::pad("q3_delta", 12) << "\n";
        std::size_t rank = 1;
        for (const ShortlistEntry& entry : report.shortlist) {
            out << "  " << detail::pad(std::to_string(rank), 6)
                << detail::pad(entry.model.spec_string(), 18)
                << detail::pad(std::to_string(entry.compat.compatible_count) + "/4", 12)
                << detail::pad(format_significant(entry.compat.total_abs_deviation), 12)
                << detail::pad(format_significant(entry.compat.shape_delta_q1), 12)
                << detail::pad(format_significant(entry.compat.shape_delta_q3), 12)
                << "\n";
            ++rank;
        }
    }
    out << "\ntail index estimates\n";
    if (!report.estimates_triggered) {
        out << "  not triggered: no shortlisted entry has a heavy right tail\n";
    } else {
        std::istringstream lines(estimates_text(report.estimates));
        std::string line;
        while (std::getline(lines, line))
            out << "  " << line << "\n";
    }
    return out.str();
}

} // namespace heavytail::render
