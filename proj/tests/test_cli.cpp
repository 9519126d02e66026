#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "lapspec/graph.hpp"
#include "lapspec/io.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/sampling.hpp"

using namespace lapspec;
namespace fs = std::filesystem;

namespace {

std::string cli_binary() {
    const char* env = std::getenv("LAPSPEC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "LAPSPEC_CLI must point at the built binary");
    return env;
}

/// Scratch directory shared by one test binary run, removed at exit.
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("lapspec-cli-" + std::to_string(static_cast<unsigned long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int run_id = 0;
    const fs::path out = scratch_dir() / ("out-" + std::to_string(++run_id) + ".txt");
    const fs::path err = scratch_dir() / ("err-" + std::to_string(run_id) + ".txt");
    const std::string cmd = env_prefix + "\"" + cli_binary() + "\" " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out.string());
    r.err = read_text_file(err.string());
    return r;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    write_text_file(p.string(), content);
    return p.string();
}

} // namespace

TEST_CASE("spectrum subcommand prints eigenvalues as JSON") {
    const std::string csv = write_scratch("ktilde3.csv", matrix_to_csv(k_tilde(3)));
    const RunResult r = run_cli("spectrum " + csv);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
}

TEST_CASE("verify subcommand runs the battery and reports per check") {
    fs::path tsv = scratch_dir() / "cycle5.tsv";
    write_digraph_tsv(cycle_digraph(5, Rat(1)), tsv.string());

    const RunResult r = run_cli("verify " + tsv.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["reports"].size() == 5);
    CHECK(r.err.find("spectrum-correspondence: pass") != std::string::npos);
    CHECK(r.err.find("hamiltonian-extremal: pass") != std::string::npos);
}

TEST_CASE("verify handles exact CSV input") {
    const std::string csv =
        write_scratch("exact.csv", "0.5,-0.25,-0.25\n-0.25,0.5,-0.25\n0,-0.25,0.25\n");
    const RunResult r = run_cli("verify --exact " + csv);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["reports"].size() == 4);
}

TEST_CASE("verify rejects an out-of-class matrix with the usage code") {
    const std::string csv = write_scratch("invalid.csv", "0.9,-0.9\n-0.9,0.9\n");
    const RunResult r = run_cli("verify " + csv);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("invalid input") != std::string::npos);
}

TEST_CASE("region and cycloid subcommands write SVG files") {
    const fs::path svg = scratch_dir() / "region.svg";
    CHECK(run_cli("region --n 6 --svg " + svg.string()).exit_code == 0);
    CHECK(read_text_file(svg.string()).rfind("<svg", 0) == 0);

    const fs::path cyc = scratch_dir() / "cycloid.svg";
    CHECK(run_cli("cycloid --n 16 --svg " + cyc.string()).exit_code == 0);
    CHECK(read_text_file(cyc.string()).find("<path") != std::string::npos);
}

TEST_CASE("polygon subcommand lists vertices") {
    SUBCASE("TSV output has 2(n-1) lines") {
        const RunResult r = run_cli("polygon --n 5");
        CHECK(r.exit_code == 0);
        int lines = 0;
        for (char c : r.out)
            if (c == '\n') ++lines;
        CHECK(lines == 8);
    }
    SUBCASE("JSON output carries the order and both endpoints") {
        const RunResult r = run_cli("polygon --n 4 --json");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["n"] == 4);
        REQUIRE(j["vertices"].size() == 6);
        CHECK(j["vertices"][0]["re"] == 0.0);
        CHECK(j["vertices"][3]["re"] == 1.0);
    }
    SUBCASE("SVG with sample overlay") {
        const fs::path svg = scratch_dir() / "overlay.svg";
        const RunResult r =
            run_cli("polygon --n 6 --svg " + svg.string() + " --samples 20 --seed 7");
        CHECK(r.exit_code == 0);
        CHECK(read_text_file(svg.string()).find("<circle") != std::string::npos);
    }
}

TEST_CASE("conjecture subcommand is deterministic across thread counts") {
    const fs::path one = scratch_dir() / "conj-one.json";
    const fs::path many = scratch_dir() / "conj-many.json";
    const std::string args = "conjecture --n 5 --trials 400 --seed 42 --out ";
    CHECK(run_cli(args + one.string(), "LAPSPEC_THREADS=1 ").exit_code == 0);
    CHECK(run_cli(args + many.string(), "LAPSPEC_THREADS=8 ").exit_code == 0);
    const std::string a = read_text_file(one.string());
    CHECK(a == read_text_file(many.string()));

    const auto j = nlohmann::json::parse(a);
    CHECK(j["pass"] == true);
    CHECK(j["eigenvalues_tested"] == 2000);
    CHECK(j["violations"].empty());
}

TEST_CASE("conjecture without --out prints the report") {
    const RunResult r = run_cli("conjecture --n 3 --trials 5 --seed 1");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n"] == 3);
    CHECK(r.err.find("tested 15 eigenvalues") != std::string::npos);
}

TEST_CASE("witness subcommand") {
    SUBCASE("a polygon point yields a matrix and passes") {
        const RunResult r = run_cli("witness --n 6 --re 0.5 --im 0.2");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["residual"].get<double>() <= 1e-8);
        CHECK(j["matrix"].size() == 6);
        CHECK(j["coefficients"].contains("a"));
    }
    SUBCASE("a point outside the polygon is a usage error") {
        CHECK(run_cli("witness --n 4 --re 0.9 --im 0.3").exit_code == 2);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);                         // missing subcommand
    CHECK(run_cli("no-such-command").exit_code == 2);          // unknown subcommand
    CHECK(run_cli("spectrum /no/such/file.csv").exit_code == 2);
    CHECK(run_cli("region --n 1 --svg /tmp/x.svg").exit_code == 2); // bad order
    CHECK(run_cli("--help").exit_code == 0);
}
