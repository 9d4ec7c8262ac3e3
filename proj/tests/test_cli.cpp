#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed CLI binary end to end through std::system.

namespace {

namespace fs = std::filesystem;

const std::string kCli = INTERFERO_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("interfero_cli_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

int run(const std::string& args) {
    const std::string cmd = "\"" + kCli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_files(const fs::path& dir, const std::string& prefix,
                const std::string& ext) {
    int n = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        const auto name = e.path().filename().string();
        if (name.rfind(prefix, 0) == 0 && e.path().extension() == ext) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("family runs produce labeled files") {
    TempDir dir("homi");
    CHECK(run("homi --out " + dir.str() + " --set n_modes=4 --set samples=201") == 0);
    const auto csv = dir.path / "homi_curve.csv";
    REQUIRE(fs::exists(csv));
    const auto text = slurp(csv);
    CHECK(text.find("# family: homi") != std::string::npos);
    CHECK(text.find("# n_modes: 4") != std::string::npos);
    CHECK(fs::exists(dir.path / "homi_curve.svg"));

    CHECK(run("msi --out " + dir.str() + " --set samples=201") == 0);
    CHECK(fs::exists(dir.path / "msi_curve.csv"));
    CHECK(run("noon --out " + dir.str() + " --set samples=201") == 0);
    CHECK(fs::exists(dir.path / "noon_curve.csv"));
}

TEST_CASE("output is byte-identical across runs") {
    TempDir a("det_a"), b("det_b");
    const std::string args = " --set n_modes=5 --set samples=301 --format csv";
    CHECK(run("homi --out " + a.str() + args) == 0);
    CHECK(run("homi --out " + b.str() + args) == 0);
    CHECK(slurp(a.path / "homi_curve.csv") == slurp(b.path / "homi_curve.csv"));
}

TEST_CASE("config file values are overridden by --set") {
    TempDir dir("config");
    const auto cfg = dir.path / "run.json";
    {
        std::ofstream out(cfg);
        out << "{\"n_modes\": 2, \"samples\": 101}\n";
    }
    CHECK(run("homi --config " + cfg.string() + " --out " + dir.str() +
              " --format csv --set n_modes=3") == 0);
    const auto text = slurp(dir.path / "homi_curve.csv");
    CHECK(text.find("# n_modes: 3") != std::string::npos);  // flag wins
}

TEST_CASE("fisher family emits the curve, maximum and Monte-Carlo summary") {
    TempDir dir("fisher");
    CHECK(run("fisher --out " + dir.str() + " --seed 7 --set samples=201 "
              "--set n_modes=1 --set crlb=1 --set num_measurements=2000 "
              "--set num_trials=50") == 0);
    CHECK(fs::exists(dir.path / "fisher_curve.csv"));
    const auto text = slurp(dir.path / "fisher_summary.json");
    CHECK(text.find("\"fi_max_per_ps2\"") != std::string::npos);
    CHECK(text.find("\"sd_over_crlb\"") != std::string::npos);
}

TEST_CASE("fit family emits scan and fit parameters") {
    TempDir dir("fit");
    CHECK(run("fit --out " + dir.str() + " --set n_max=12") == 0);
    CHECK(fs::exists(dir.path / "sqrt_fi_vs_n.csv"));
    const auto text = slurp(dir.path / "sqrt_fi_fit.json");
    CHECK(text.find("\"r_squared\"") != std::string::npos);
}

TEST_CASE("figure sets land the documented panel counts") {
    TempDir dir("fig2");
    CHECK(run("fig2 --out " + dir.str() + " --format csv") == 0);
    CHECK(count_files(dir.path, "fig2_jsa_", ".csv") == 8);
    CHECK(count_files(dir.path, "fig2_homi_", ".csv") == 8);
    CHECK(count_files(dir.path, "fig2_slits_", ".csv") == 8);
    CHECK(count_files(dir.path, "fig2_msi_", ".csv") == 8);
    CHECK(count_files(dir.path, "fig2", ".csv") == 32);
    CHECK(count_files(dir.path, "fig2", ".svg") == 0);  // csv-only run
}

TEST_CASE("tabulated envelope path drives the oracle from the command line") {
    TempDir dir("env");
    const auto env = dir.path / "gauss2d.txt";
    {
        std::ofstream out(env);
        const int n = 401;
        out << "# tabulated Gaussian\n";
        out << "grid -12 12 " << n << " -12 12 " << n << "\n";
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const double u = -12.0 + 24.0 * i / (n - 1);
                const double v = -12.0 + 24.0 * j / (n - 1);
                out << std::exp(-(u * u + v * v) / 4.0) << " ";
            }
            out << "\n";
        }
    }
    CHECK(run("homi --out " + dir.str() + " --set envelope_file=" + env.string() +
              " --set n_modes=2 --set samples=41 --set quad_tol=1e-3") == 0);
    const auto text = slurp(dir.path / "homi_curve.csv");
    CHECK(text.find("brute-force oracle with tabulated envelope") != std::string::npos);
}

TEST_CASE("validate subcommand writes the report and sets the exit code") {
    TempDir dir("validate");
    CHECK(run("validate --out " + dir.str()) == 0);
    const auto text = slurp(dir.path / "validation_report.json");
    CHECK(text.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("unknown subcommands and malformed sets fail loudly") {
    CHECK(run("bogus") != 0);
    TempDir dir("bad");
    CHECK(run("homi --out " + dir.str() + " --set n_modes") != 0);
    CHECK(run("homi --out " + dir.str() + " --set n_modes=abc") != 0);
}
