#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "heavytail/heavytail.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::filesystem::path work_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "heavytail_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream file(path);
    file << content;
}

// Runs the CLI through the shell so pipes and redirection work; args is a
// shell fragment appended after the binary path (or a full pipeline when
// `pipeline` already contains the binary).
RunResult run_shell(const std::string& command) {
    const auto out_path = work_dir() / "stdout.txt";
    const auto err_path = work_dir() / "stderr.txt";
    const std::string full = command + " > " + out_path.string() + " 2> " +
                             err_path.string();
    const int rc = std::system(full.c_str());
    RunResult result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

RunResult run_cli(const std::string& args) {
    return run_shell(std::string(HEAVYTAIL_CLI_PATH) + " " + args);
}

std::filesystem::path write_sample_file(const std::string& name,
                                        const heavytail::Distribution& d,
                                        std::size_t n, std::uint64_t seed) {
    auto stream = heavytail::RandomStream::substream(seed, 0, 0);
    std::ostringstream body;
    body << std::setprecision(17);
    for (double v : heavytail::sample(d, stream, n))
        body << v << "\n";
    const auto path = work_dir() / name;
    write_file(path, body.str());
    return path;
}

} // namespace

TEST_CASE("cli catalog") {
    const RunResult text = run_cli("catalog");
    CHECK(text.status == 0);
    CHECK_THAT(text.out, ContainsSubstring("pareto(0.5,1)"));
    CHECK_THAT(text.out, ContainsSubstring("p_eR"));

    const RunResult as_json = run_cli("catalog --format json");
    REQUIRE(as_json.status == 0);
    const json j = json::parse(as_json.out);
    CHECK(j.size() == 18);
    CHECK(j[0]["dist"] == "uniform(0,1)");
}

TEST_CASE("cli measures") {
    const RunResult normal = run_cli("measures --dist 'normal(0,1)' --format json");
    REQUIRE(normal.status == 0);
    const json j = json::parse(normal.out);
    CHECK(j["dist"] == "normal(0,1)");
    CHECK_THAT(j["measures"]["mild_left"].get<double>(), WithinAbs(0.0035, 5e-4));

    const RunResult uniform = run_cli("measures --dist 'uniform(0,1)' --format json");
    REQUIRE(uniform.status == 0);
    const json u = json::parse(uniform.out);
    for (const char* key : {"mild_left", "extreme_left", "mild_right",
                            "extreme_right", "mild_two", "extreme_two"})
        CHECK(u["measures"][key] == 0.0);

    const RunResult text = run_cli("measures --dist 'exponential(1)'");
    CHECK(text.status == 0);
    CHECK_THAT(text.out, ContainsSubstring("p_mL"));
}

TEST_CASE("cli boxplot and outliers") {
    const auto small = work_dir() / "small.txt";
    write_file(small, "1\n2\n3\n4\n");
    const RunResult box = run_cli("boxplot --format json " + small.string());
    REQUIRE(box.status == 0);
    const json j = json::parse(box.out);
    CHECK(j["n"] == 4);
    CHECK(j["boxplot"]["q1"] == 1.25);
    CHECK(j["boxplot"]["q3"] == 3.75);

    const auto spiked = work_dir() / "spiked.txt";
    write_file(spiked, "1\n2\n3\n4\n5\n6\n7\n8\n9\n50\n");
    const RunResult outliers = run_cli("outliers --format json " + spiked.string());
    REQUIRE(outliers.status == 0);
    const json o = json::parse(outliers.out);
    CHECK(o["extreme_right"] == 1);
    CHECK(o["total"] == 1);

    const RunResult text = run_cli("boxplot " + small.string());
    CHECK(text.status == 0);
    CHECK_THAT(text.out, ContainsSubstring("q1"));
}

TEST_CASE("cli reads stdin") {
    const std::string cli = HEAVYTAIL_CLI_PATH;
    const RunResult implicit =
        run_shell("printf '1\\n2\\n3\\n4\\n' | " + cli + " boxplot --format json");
    REQUIRE(implicit.status == 0);
    CHECK(json::parse(implicit.out)["n"] == 4);

    const RunResult dash =
        run_shell("printf '1\\n2\\n3\\n4\\n' | " + cli + " boxplot --format json -");
    REQUIRE(dash.status == 0);
    CHECK(json::parse(dash.out)["n"] == 4);
}

TEST_CASE("cli reads csv columns") {
    const auto csv = work_dir() / "table.csv";
    write_file(csv, "a,b\n1,10\n2,20\n3,30\n");
    const RunResult ok =
        run_cli("boxplot --format json --column b " + csv.string());
    REQUIRE(ok.status == 0);
    CHECK(json::parse(ok.out)["boxplot"]["q2"] == 20.0);

    const RunResult missing =
        run_cli("boxplot --format json --column c " + csv.string());
    CHECK(missing.status == 2);
    CHECK_THAT(missing.err, ContainsSubstring("column 'c' not found"));
}

TEST_CASE("cli estimates a tail index") {
    const auto path = write_sample_file("pareto_1_1.txt",
                                        heavytail::dist::Pareto(1.0, 1.0), 10000, 31);
    const RunResult one =
        run_cli("estimate --method par-quartile --format json " + path.string());
    REQUIRE(one.status == 0);
    const json j = json::parse(one.out);
    REQUIRE(j["estimates"].size() == 1);
    CHECK(j["estimates"][0]["method"] == "par-quartile");
    CHECK_THAT(j["estimates"][0]["alpha"].get<double>(), WithinAbs(1.0, 0.05));

    const RunResult all = run_cli("estimate --format json " + path.string());
    REQUIRE(all.status == 0);
    CHECK(json::parse(all.out)["estimates"].size() == 5);

    const RunResult unknown =
        run_cli("estimate --method hill " + path.string());
    CHECK(unknown.status == 2);
    CHECK_THAT(unknown.err, ContainsSubstring("unknown method"));

    // A method that cannot run on the sample is still a reportable outcome.
    const auto flat = work_dir() / "flat.txt";
    write_file(flat, "5\n5\n5\n5\n5\n");
    const RunResult failed =
        run_cli("estimate --method par-fence --format json " + flat.string());
    REQUIRE(failed.status == 0);
    const json f = json::parse(failed.out);
    CHECK(f["estimates"][0]["alpha"].is_null());
    CHECK(f["estimates"][0]["failure"] == "no-extreme-right-outliers");
}

TEST_CASE("cli simulate") {
    const auto study = work_dir() / "study.json";
    write_file(study, R"json({"cells": [{"dist": "pareto(1,1)", "n": 200}],
                          "m": 10, "seed": 5})json");
    const RunResult first =
        run_cli("simulate --study " + study.string() + " --format json");
    REQUIRE(first.status == 0);
    const json j = json::parse(first.out);
    CHECK(j["seed"] == 5);
    CHECK(j["replications"] == 10);
    CHECK(j["cells"][0]["dist"] == "pareto(1,1)");

    const RunResult again =
        run_cli("simulate --study " + study.string() + " --format json");
    CHECK(first.out == again.out);

    const RunResult threaded = run_cli("simulate --study " + study.string() +
                                       " --format json --threads 3");
    CHECK(threaded.out == first.out);

    const RunResult reseeded = run_cli("simulate --study " + study.string() +
                                       " --format json --seed 9");
    REQUIRE(reseeded.status == 0);
    CHECK(json::parse(reseeded.out)["seed"] == 9);
    CHECK(reseeded.out != first.out);

    const RunResult text = run_cli("simulate --study " + study.string());
    CHECK(text.status == 0);
    CHECK_THAT(text.out, ContainsSubstring("replications 10, seed 5"));

    const RunResult bad_study = run_cli("simulate --study /nonexistent/study.json");
    CHECK(bad_study.status == 2);
}

TEST_CASE("cli diagnose") {
    const auto path = write_sample_file("uniform.txt",
                                        heavytail::dist::Uniform(0.0, 1.0), 500, 404);
    const RunResult ok = run_cli("diagnose --format json " + path.string());
    REQUIRE(ok.status == 0);
    const json j = json::parse(ok.out);
    CHECK(j["confidence"] == 0.95);
    CHECK(j.contains("shortlist"));

    const RunResult custom =
        run_cli("diagnose --confidence 0.99 --format json " + path.string());
    REQUIRE(custom.status == 0);
    CHECK(json::parse(custom.out)["confidence"] == 0.99);

    const RunResult invalid =
        run_cli("diagnose --confidence 1.5 " + path.string());
    CHECK(invalid.status == 2);
}

TEST_CASE("cli usage errors exit with status 1") {
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("frobnicate").status == 1);
    CHECK(run_cli("catalog --bogus").status == 1);
    CHECK(run_cli("measures").status == 1);
    CHECK(run_cli("catalog --format yaml").status == 1);
    CHECK(run_cli("simulate").status == 1);

    const RunResult help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK_THAT(help.out, ContainsSubstring("catalog"));
}

TEST_CASE("cli data errors exit with status 2") {
    const RunResult missing = run_cli("boxplot /nonexistent/sample.txt");
    CHECK(missing.status == 2);
    CHECK_THAT(missing.err, ContainsSubstring("error:"));
    CHECK_THAT(missing.err, ContainsSubstring("cannot open file"));

    const RunResult bad_dist = run_cli("measures --dist 'frobnitz(1)'");
    CHECK(bad_dist.status == 2);

    const RunResult bad_param = run_cli("measures --dist 't(1.5)'");
    CHECK(bad_param.status == 2);

    const auto junk = work_dir() / "junk.txt";
    write_file(junk, "1\nabc\n3\n");
    const RunResult malformed = run_cli("outliers " + junk.string());
    CHECK(malformed.status == 2);
    CHECK_THAT(malformed.err, ContainsSubstring("line 2"));

    const auto tiny = work_dir() / "tiny.txt";
    write_file(tiny, "1\n2\n");
    CHECK(run_cli("boxplot " + tiny.string()).status == 2);
}
