// heavytail CLI: catalog listing, theoretical tail measures, empirical
// box-plot analysis, tail-index estimation, replication studies, and sample
// diagnosis. One binary, one subcommand per run.
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "heavytail/heavytail.hpp"

namespace {

heavytail::Sample read_sample(const std::string& source,
                              const std::string& column) {
    const std::optional<std::string> col =
        column.empty() ? std::nullopt : std::optional<std::string>(column);
    if (source.empty() || source == "-")
        return heavytail::load_sample(std::cin, col);
    std::ifstream file(source);
    if (!file)
        throw heavytail::data_error("cannot open file: " + source);
    return heavytail::load_sample(file, col);
}

std::string read_text_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw heavytail::data_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void emit_json(const nlohmann::ordered_json& j) {
    std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartile-fence heavy-tail analysis"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    std::string input;
    std::string column;
    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", input, "Sample file (one value per line, or CSV "
                                       "with --column); '-' or absent for stdin");
        cmd->add_option("--column", column, "CSV column holding the sample");
    };

    CLI::App* cmd_catalog =
        app.add_subcommand("catalog", "Print the reference distribution catalog");
    add_format(cmd_catalog);

    std::string dist_spec;
    CLI::App* cmd_measures = app.add_subcommand(
        "measures", "Theoretical outlier measures of one distribution");
    cmd_measures->add_option("--dist", dist_spec, "Distribution, e.g. pareto(1,1)")
        ->required();
    add_format(cmd_measures);

    CLI::App* cmd_boxplot =
        app.add_subcommand("boxplot", "Empirical box-plot of a sample");
    add_input(cmd_boxplot);
    add_format(cmd_boxplot);

    CLI::App* cmd_outliers =
        app.add_subcommand("outliers", "Outlier counts of a sample");
    add_input(cmd_outliers);
    add_format(cmd_outliers);

    std::string method = "all";
    CLI::App* cmd_estimate =
        app.add_subcommand("estimate", "Tail-index estimates from a sample");
    cmd_estimate->add_option("--method", method, "Estimator, or 'all'")
        ->capture_default_str();
    add_input(cmd_estimate);
    add_format(cmd_estimate);

    std::string study_path;
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    unsigned threads = 1;
    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Run a replication study");
    cmd_simulate->add_option("--study", study_path, "Study definition JSON file")
        ->required();
    cmd_simulate
        ->add_option("--seed", seed_override, "Override the study file's seed")
        ->each([&](const std::string&) { seed_given = true; });
    cmd_simulate->add_option("--threads", threads, "Worker thread count")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    add_format(cmd_simulate);

    double confidence = 0.95;
    CLI::App* cmd_diagnose = app.add_subcommand(
        "diagnose", "Compare a sample against the distribution catalog");
    cmd_diagnose->add_option("--confidence", confidence, "Interval confidence level")
        ->capture_default_str();
    add_input(cmd_diagnose);
    add_format(cmd_diagnose);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const bool json = format == "json";
    try {
        if (cmd_catalog->parsed()) {
            const auto entries = heavytail::catalog();
            if (json)
                emit_json(heavytail::render::catalog_json(entries));
            else
                std::cout << heavytail::render::catalog_text(entries);
        } else if (cmd_measures->parsed()) {
            const heavytail::Distribution d = heavytail::parse_distribution(dist_spec);
            const heavytail::TailProfile p = heavytail::tail_profile(d);
            if (json)
                emit_json(heavytail::render::measures_json(d, p));
            else
                std::cout << heavytail::render::measures_text(d, p);
        } else if (cmd_boxplot->parsed()) {
            const heavytail::Sample sample = read_sample(input, column);
            const heavytail::BoxPlotSummary s = heavytail::empirical_boxplot(sample);
            if (json) {
                nlohmann::ordered_json j;
                j["n"] = sample.n();
                j["boxplot"] = heavytail::render::boxplot_json(s);
                emit_json(j);
            } else {
                std::cout << heavytail::render::boxplot_text(s, sample.n());
            }
        } else if (cmd_outliers->parsed()) {
            const heavytail::Sample sample = read_sample(input, column);
            const heavytail::OutlierCounts counts = heavytail::count_outliers(
                sample, heavytail::empirical_boxplot(sample));
            if (json)
                emit_json(heavytail::render::outliers_json(counts));
            else
                std::cout << heavytail::render::outliers_text(counts);
        } else if (cmd_estimate->parsed()) {
            std::vector<heavytail::EstimateOutcome> outcomes;
            if (method == "all") {
                outcomes = heavytail::estimate_all(read_sample(input, column));
            } else {
                const auto m = heavytail::parse_method(method);
                if (!m)
                    throw heavytail::data_error("unknown method: " + method);
                outcomes.push_back(heavytail::try_estimate(
                    *m, heavytail::tail_stats(read_sample(input, column))));
            }
            if (json)
                emit_json(heavytail::render::estimates_json(outcomes));
            else
                std::cout << heavytail::render::estimates_text(outcomes);
        } else if (cmd_simulate->parsed()) {
            heavytail::StudyConfig config =
                heavytail::study_from_json(read_text_file(study_path));
            if (seed_given)
                config.master_seed = seed_override;
            const heavytail::StudyReport report = heavytail::run_study(config, threads);
            if (json)
                emit_json(heavytail::report_to_json(report));
            else
                std::cout << heavytail::render::study_text(report);
        } else if (cmd_diagnose->parsed()) {
            const heavytail::Sample sample = read_sample(input, column);
            const heavytail::DiagnosisReport report =
                heavytail::diagnose(sample, confidence);
            if (json)
                emit_json(heavytail::render::diagnosis_json(report));
            else
                std::cout << heavytail::render::diagnosis_text(report);
        }
    } catch (const heavytail::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
