#pragma once

// Deterministic replication studies: for each (distribution, n) cell draw m
// samples from counter-based substreams, run the chosen estimators on every
// sample, and aggregate per-method mean and sd with failures excluded and
// tallied. Results are bit-identical for a given config at any thread count.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "heavytail/distribution.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/errors.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/rng.hpp"

namespace heavytail {

struct StudyCell {
    Distribution model;
    std::size_t n = 0;
};

struct StudyConfig {
    std::vector<StudyCell> cells;
    std::size_t replications = 0;
    std::uint64_t master_seed = 0;
    std::vector<Method> methods;
    FenceConstants fences = FenceConstants();

    void validate() const {
        if (cells.empty())
            throw parameter_error("study: cells must be nonempty");
        for (const auto& cell : cells)
            if (cell.n < 3)
                throw parameter_error("study: cell sample size must be at least 3");
        if (replications < 2)
            throw parameter_error("study: replications must be at least 2");
        if (methods.empty())
            throw parameter_error("study: methods must be nonempty");
        for (std::size_t i = 0; i < methods.size(); ++i)
            for (std::size_t j = i + 1; j < methods.size(); ++j)
                if (methods[i] == methods[j])
                    throw parameter_error(std::string("study: duplicate method ") +
                                          method_name(methods[i]));
    }
};

struct MethodSummary {
    Method method;
    std::size_t valid_count = 0;
    std::size_t failure_count = 0;
    std::map<EstimateFailure, std::size_t> failures;
    std::optional<double> mean;
    std::optional<double> sd;
};

struct CellReport {
    StudyCell cell;
    std::vector<MethodSummary> methods;
};

struct StudyReport {
    StudyConfig config;
    std::vector<CellReport> cells;
};

namespace detail {

// One replication: a fresh substream keyed by (seed, cell, replication), so
// the draw sequence is independent of scheduling.
inline std::vector<EstimateOutcome> run_replication(const StudyConfig& config,
                                                    std::size_t cell_index,
                                                    std::size_t replication) {
    const StudyCell& cell = config.cells[cell_index];
    RandomStream stream = RandomStream::substream(config.master_seed, cell_index,
                                                  replication);
    Sample s(sample(cell.model, stream, cell.n));
    const EstimatorInputs in = tail_stats(s, config.fences);
    std::vector<EstimateOutcome> out;
    out.reserve(config.methods.size());
    for (Method m : config.methods)
        out.push_back(try_estimate(m, in));
    return out;
}

} // namespace detail

inline StudyReport run_study(const StudyConfig& config, unsigned threads = 1) {
    config.validate();
    const std::size_t m = config.replications;
    const std::size_t total = config.cells.size() * m;

    // Slot per (cell, replication); disjoint writes need no locking.
    std::vector<std::vector<std::vector<EstimateOutcome>>> slots(config.cells.size());
    for (auto& cell_slots : slots)
        cell_slots.resize(m);

    std::atomic<std::size_t> next_task{0};
    std::exception_ptr first_failure;
    std::mutex failure_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= total)
                return;
            const std::size_t cell_index = t / m;
            const std::size_t replication = t % m;
            try {
                slots[cell_index][replication] =
                    detail::run_replication(config, cell_index, replication);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!first_failure)
                    first_failure = std::current_exception();
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (first_failure)
        std::rethrow_exception(first_failure);

    // Aggregate in replication order: two-pass mean/sd, order-independent of
    // how the slots were filled.
    StudyReport report{config, {}};
    report.cells.reserve(config.cells.size());
    for (std::size_t i = 0; i < config.cells.size(); ++i) {
        CellReport cell_report{config.cells[i], {}};
        cell_report.methods.reserve(config.methods.size());
        for (std::size_t k = 0; k < config.methods.size(); ++k) {
            MethodSummary summary;
            summary.method = config.methods[k];
            std::vector<double> values;
            values.reserve(m);
            for (std::size_t j = 0; j < m; ++j) {
                const EstimateOutcome& outcome = slots[i][j][k];
                if (const auto* res = std::get_if<EstimateResult>(&outcome)) {
                    values.push_back(res->alpha_hat);
                } else {
                    const auto& err = std::get<EstimateError>(outcome);
                    ++summary.failures[err.reason];
                }
            }
            summary.valid_count = values.size();
            summary.failure_count = m - values.size();
            if (!values.empty()) {
                double sum = 0.0;
                for (double v : values)
                    sum += v;
                const double mean = sum / static_cast<double>(values.size());
                summary.mean = mean;
                if (values.size() >= 2) {
                    double ssd = 0.0;
                    for (double v : values)
                        ssd += (v - mean) * (v - mean);
                    summary.sd = std::sqrt(ssd / static_cast<double>(values.size() - 1));
                }
            }
            cell_report.methods.push_back(std::move(summary));
        }
        report.cells.push_back(std::move(cell_report));
    }
    return report;
}

// The method whose mean lands closest to the true index, restricted to
// methods that returned an estimate in at least 90% of replications; ties go
// to the smaller sd. The floor avoids crowning a method that rarely returns.
inline Method best_method(const StudyReport& report, std::size_t cell_index,
                          double true_alpha) {
    if (cell_index >= report.cells.size())
        throw domain_error("best_method: cell index out of range");
    const std::size_t m = report.config.replications;
    const MethodSummary* best = nullptr;
    for (const MethodSummary& summary : report.cells[cell_index].methods) {
        if (10 * summary.valid_count < 9 * m || !summary.mean)
            continue;
        if (!best) {
            best = &summary;
            continue;
        }
        const double dev = std::fabs(*summary.mean - true_alpha);
        const double best_dev = std::fabs(*best->mean - true_alpha);
        if (dev < best_dev ||
            (dev == best_dev && summary.sd.value_or(0.0) < best->sd.value_or(0.0)))
            best = &summary;
    }
    if (!best)
        throw data_error("best_method: no method met the 90% validity floor");
    return best->method;
}

// Study definition file: {"cells": [{"dist": "pareto(1,1)", "n": 1000}],
// "m": 10000, "seed": 42, "methods": ["all"]}.
inline StudyConfig study_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("study file: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw data_error("study file: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "cells" && key != "m" && key != "seed" && key != "methods")
            throw data_error("study file: unknown key \"" + key + "\"");
    }
    if (!j.contains("cells") || !j["cells"].is_array())
        throw data_error("study file: \"cells\" array is required");
    if (!j.contains("m") || !j["m"].is_number_unsigned())
        throw data_error("study file: \"m\" must be a positive integer");
    if (!j.contains("seed") || !j["seed"].is_number_unsigned())
        throw data_error("study file: \"seed\" must be a nonnegative integer");

    StudyConfig config;
    config.replications = j["m"].get<std::size_t>();
    config.master_seed = j["seed"].get<std::uint64_t>();
    for (const auto& cell : j["cells"]) {
        if (!cell.is_object() || !cell.contains("dist") || !cell["dist"].is_string() ||
            !cell.contains("n") || !cell["n"].is_number_unsigned())
            throw data_error(
                "study file: each cell needs a \"dist\" string and an \"n\" integer");
        config.cells.push_back(
            {parse_distribution(cell["dist"].get<std::string>()),
             cell["n"].get<std::size_t>()});
    }
    if (j.contains("methods")) {
        if (!j["methods"].is_array())
            throw data_error("study file: \"methods\" must be an array of strings");
        for (const auto& entry : j["methods"]) {
            if (!entry.is_string())
                throw data_error("study file: \"methods\" must be an array of strings");
            const std::string name = entry.get<std::string>();
            if (name == "all") {
                config.methods.assign(std::begin(all_methods), std::end(all_methods));
                continue;
            }
            const auto method = parse_method(name);
            if (!method)
                throw data_error("study file: unknown method \"" + name + "\"");
            config.methods.push_back(*method);
        }
    } else {
        config.methods.assign(std::begin(all_methods), std::end(all_methods));
    }
    config.validate();
    return config;
}

inline nlohmann::ordered_json report_to_json(const StudyReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.config.master_seed;
    j["replications"] = report.config.replications;
    nlohmann::ordered_json method_names = nlohmann::ordered_json::array();
    for (Method m : report.config.methods)
        method_names.push_back(method_name(m));
    j["methods"] = std::move(method_names);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellReport& cell : report.cells) {
        nlohmann::ordered_json cj;
        cj["dist"] = cell.cell.model.spec_string();
        cj["n"] = cell.cell.n;
        nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
        for (const MethodSummary& summary : cell.methods) {
            nlohmann::ordered_json sj;
            sj["method"] = method_name(summary.method);
            sj["valid_count"] = summary.valid_count;
            sj["failure_count"] = summary.failure_count;
            nlohmann::ordered_json failures;
            for (EstimateFailure reason :
                 {EstimateFailure::NoExtremeRightOutliers,
                  EstimateFailure::NonPositiveOuterFence,
                  EstimateFailure::UnitOuterFence, EstimateFailure::NonPositiveQ1,
                  EstimateFailure::QuartilesNotIncreasing,
                  EstimateFailure::SingularDenominator}) {
                const auto it = summary.failures.find(reason);
                failures[failure_key(reason)] =
                    it == summary.failures.end() ? 0 : it->second;
            }
            sj["failures"] = std::move(failures);
            if (summary.mean)
                sj["mean"] = *summary.mean;
            else
                sj["mean"] = nullptr;
            if (summary.sd)
                sj["sd"] = *summary.sd;
            else
                sj["sd"] = nullptr;
            summaries.push_back(std::move(sj));
        }
        cj["estimators"] = std::move(summaries);
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    return j;
}

} // namespace heavytail
