#pragma once

// Order statistics, the interpolated empirical quantile
//   F^{-1}(p) = X_(k) + ((n+1)p - k) * (X_(k+1) - X_(k)),  k = [(n+1)p],
// empirical box-plots and mild/extreme outlier counting.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heavytail/boxplot.hpp"
#include "heavytail/errors.hpp"

namespace heavytail {

class Sample {
public:
    explicit Sample(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < 3)
            throw insufficient_data_error(
                "sample: need at least 3 observations, got " +
                std::to_string(values_.size()));
        for (double v : values_)
            if (!std::isfinite(v))
                throw data_error("sample: all observations must be finite");
        sorted_ = values_;
        std::stable_sort(sorted_.begin(), sorted_.end());
    }

    std::size_t n() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

// Valid for 1/(n+1) <= p <= n/(n+1); integer positions (n+1)p return the
// order statistic exactly.
inline double empirical_quantile(const Sample& sample, double p) {
    const double n = static_cast<double>(sample.n());
    const double t = (n + 1.0) * p;
    const double slack = 1e-9; // absorb float fuzz at the range endpoints
    if (!(t >= 1.0 - slack && t <= n + slack)) {
        std::ostringstream msg;
        msg << "empirical quantile: p = " << p
            << " outside admissible range [" << 1.0 / (n + 1.0) << ", "
            << n / (n + 1.0) << "] for n = " << sample.n();
        throw domain_error(msg.str());
    }
    const auto& x = sample.sorted();
    const std::size_t k = static_cast<std::size_t>(
        std::clamp(std::floor(t), 1.0, n));
    if (k >= sample.n())
        return x[sample.n() - 1];
    const double frac = std::clamp(t - static_cast<double>(k), 0.0, 1.0);
    return x[k - 1] + frac * (x[k] - x[k - 1]);
}

inline BoxPlotSummary empirical_boxplot(const Sample& sample,
                                        const FenceConstants& fc = FenceConstants()) {
    return summary_from_quartiles(empirical_quantile(sample, 0.25),
                                  empirical_quantile(sample, 0.5),
                                  empirical_quantile(sample, 0.75), fc);
}

struct OutlierCounts {
    std::size_t mild_left = 0;
    std::size_t extreme_left = 0;
    std::size_t mild_right = 0;
    std::size_t extreme_right = 0;
    std::size_t n = 0;

    double mild_left_freq() const { return static_cast<double>(mild_left) / n; }
    double extreme_left_freq() const { return static_cast<double>(extreme_left) / n; }
    double mild_right_freq() const { return static_cast<double>(mild_right) / n; }
    double extreme_right_freq() const { return static_cast<double>(extreme_right) / n; }
    std::size_t total() const {
        return mild_left + extreme_left + mild_right + extreme_right;
    }
};

// Values exactly on a fence classify inward: equal to an inner fence is not
// an outlier, equal to an outer fence is mild, not extreme.
inline OutlierCounts count_outliers(const Sample& sample,
                                    const BoxPlotSummary& summary) {
    OutlierCounts c;
    c.n = sample.n();
    for (double v : sample.values()) {
        if (v < summary.outer_left)
            ++c.extreme_left;
        else if (v < summary.inner_left)
            ++c.mild_left;
        else if (v > summary.outer_right)
            ++c.extreme_right;
        else if (v > summary.inner_right)
            ++c.mild_right;
    }
    return c;
}

// Reads one value per line, or the named column of a comma-separated file
// whose first line is a header. Errors name the offending line.
inline Sample load_sample(std::istream& in,
                          const std::optional<std::string>& column = std::nullopt) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t field = 0;
    bool header_pending = column.has_value();

    const auto parse_field = [&](const std::string& token) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw data_error("line " + std::to_string(line_no) +
                             ": not a number: '" + token + "'");
        }
        while (used < token.size() &&
               std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size())
            throw data_error("line " + std::to_string(line_no) +
                             ": not a number: '" + token + "'");
        return value;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const bool blank =
            line.find_first_not_of(" \t") == std::string::npos;
        if (blank)
            continue;
        if (header_pending) {
            // first non-blank row is the header: locate the requested column
            std::stringstream header(line);
            std::string name;
            std::size_t idx = 0;
            bool have_field = false;
            while (std::getline(header, name, ',')) {
                if (name == *column) {
                    field = idx;
                    have_field = true;
                    break;
                }
                ++idx;
            }
            if (!have_field)
                throw data_error("column '" + *column + "' not found in header");
            header_pending = false;
            continue;
        }
        if (column) {
            std::stringstream row(line);
            std::string token;
            std::size_t idx = 0;
            bool found = false;
            while (std::getline(row, token, ',')) {
                if (idx == field) {
                    values.push_back(parse_field(token));
                    found = true;
                    break;
                }
                ++idx;
            }
            if (!found)
                throw data_error("line " + std::to_string(line_no) +
                                 ": missing column '" + *column + "'");
        } else {
            values.push_back(parse_field(line));
        }
    }
    return Sample(std::move(values));
}

} // namespace heavytail
