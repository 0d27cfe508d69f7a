// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "mimicry/betafit.hpp"
#include "mimicry/indicator.hpp"
#include "mimicry/run.hpp"
#include "mimicry/specfun.hpp"
#include "mimicry/synth.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace mimicry;

namespace {

// Collects the reasons a criterion failed; empty means pass.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(MIMICRY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("mimicry_acceptance_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) {
        xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return xs;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

// |a - b| measured against the largest magnitude taking part in the identity.
double identity_err(double a, double b, std::initializer_list<double> terms) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    for (double t : terms) {
        scale = std::max(scale, std::abs(t));
    }
    return std::abs(a - b) / scale;
}

Check ac1() {
    Check c;
    const double one = fit_u(SufficientStats{500, -2.0}).u_hat;
    const double half = fit_u(SufficientStats{500, -4.0 * std::numbers::ln2}).u_hat;
    c.expect(std::abs(one - 1.0) <= 1e-6, "mean_t = -2 gave " + fmt(one));
    c.expect(std::abs(half - 0.5) <= 1e-6, "mean_t = -4 ln 2 gave " + fmt(half));
    return c;
}

Check ac2() {
    Check c;
    for (int k = 0; k < 20; ++k) {
        const double u_true = 0.5 + 7.5 * k / 19.0;
        const auto fs = sample_symmetric_beta(u_true, 500, 1000 + static_cast<std::uint64_t>(k));
        const double fit = fit_u(fs).u_hat;
        const double grid = grid_mle_oracle(fs, UGrid{0.1, 20.0, 1e-3});
        c.expect(std::abs(fit - grid) <= 2e-3,
                 "U* = " + fmt(u_true) + ": fit " + fmt(fit) + " vs grid " + fmt(grid));
    }
    return c;
}

Check ac3() {
    Check c;
    std::uint64_t seed = 3000;
    for (double u_true : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double fit = fit_u(sample_symmetric_beta(u_true, 500, seed++)).u_hat;
        c.expect(rel_err(fit, u_true) <= 0.15, "U* = " + fmt(u_true) + " recovered as " + fmt(fit));
    }
    return c;
}

Check ac4() {
    using namespace specfun;
    Check c;
    const double gamma_e = 0.57721566490153286061;
    const double pi = std::numbers::pi;
    c.expect(rel_err(digamma(1.0), -gamma_e) <= 1e-10, "psi(1)");
    c.expect(rel_err(trigamma(1.0), pi * pi / 6.0) <= 1e-10, "psi'(1)");
    c.expect(rel_err(ln_gamma(0.5), 0.5 * std::log(pi)) <= 1e-10, "lnGamma(1/2)");
    c.expect(rel_err(digamma(0.5), -gamma_e - 2.0 * std::numbers::ln2) <= 1e-10, "psi(1/2)");
    c.expect(rel_err(trigamma(0.5), pi * pi / 2.0) <= 1e-10, "psi'(1/2)");
    c.expect(std::abs(ln_gamma(1.0)) <= 1e-15 && std::abs(ln_gamma(2.0)) <= 1e-15, "lnGamma(1), lnGamma(2)");
    for (double x : log_spaced(1e-3, 1e3, 500)) {
        const double lg = ln_gamma(x);
        const double dg = digamma(x);
        const double tg = trigamma(x);
        c.expect(identity_err(ln_gamma(x + 1.0), lg + std::log(x), {lg, std::log(x)}) <= 1e-10,
                 "lnGamma recurrence at " + fmt(x));
        c.expect(identity_err(digamma(x + 1.0), dg + 1.0 / x, {dg, 1.0 / x}) <= 1e-10,
                 "psi recurrence at " + fmt(x));
        c.expect(identity_err(trigamma(x + 1.0), tg - 1.0 / (x * x), {tg, 1.0 / (x * x)}) <= 1e-10,
                 "psi' recurrence at " + fmt(x));
    }
    return c;
}

Check ac5() {
    Check c;
    const auto grid = log_spaced(1e-3, 1e3, 100);
    for (double mean_t : {-1.4, -2.0, -4.0, -20.0, -600.0}) {
        const SufficientStats s{500, mean_t};
        double prev = score(grid.front(), s);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double cur = score(grid[i], s);
            c.expect(cur < prev, "score not decreasing at U = " + fmt(grid[i]) + ", mean_t = " + fmt(mean_t));
            prev = cur;
        }
        for (double u : {0.01, 0.3, 0.7, 3.0, 30.0}) {
            const double h = 1e-6 * u;
            const double fd = (log_likelihood(u + h, s) - log_likelihood(u - h, s)) / (2 * h) / s.n;
            const double sc = score(u, s);
            c.expect(std::abs(fd - sc) <= 1e-5 * std::abs(sc),
                     "gradient at U = " + fmt(u) + ": fd " + fmt(fd) + " vs score " + fmt(sc));
        }
    }
    return c;
}

Check ac6() {
    Check c;
    const auto drop = project_drop(24000.0, AnalysisConfig{});
    c.expect(drop.low_points == 1200.0, "low projection " + fmt(drop.low_points));
    c.expect(drop.high_points == 1920.0, "high projection " + fmt(drop.high_points));
    const double pct = points_to_pct(1175.21, 25548.0);
    c.expect(std::abs(pct - 4.60) <= 0.01, "points_to_pct gave " + fmt(pct));
    return c;
}

// Index into fractions.csv of each crossing date listed in report.json.
std::vector<long> crossing_rows(const fs::path& dir) {
    std::vector<std::string> dates;
    std::istringstream csv(slurp(dir / "fractions.csv"));
    std::string line;
    std::getline(csv, line);
    while (std::getline(csv, line)) {
        dates.push_back(line.substr(0, line.find(',')));
    }
    std::vector<long> rows;
    const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    for (const auto& d : report["alert"]["crossings"]) {
        const auto it = std::find(dates.begin(), dates.end(), d.get<std::string>());
        rows.push_back(it == dates.end() ? -1 : static_cast<long>(it - dates.begin()));
    }
    return rows;
}

Check ac7() {
    Check c;
    const std::string common = " --window 81 --baseline 252 --mode zscore --synth-tickers 500 --formats csv,json";

    const auto shift_dir = scratch("ac7_shift");
    const int shift_code = run_cli("--synth-spec 4:400,1:120" + common + " --out " + shift_dir.string());
    c.expect(shift_code == kExitDanger, "regime shift exit code " + std::to_string(shift_code));
    if (shift_code == kExitDanger) {
        // Day 400 is the first U = 1 day.
        const auto rows = crossing_rows(shift_dir);
        const bool timely =
            std::any_of(rows.begin(), rows.end(), [](long r) { return r >= 400 && r < 400 + 81; });
        c.expect(timely, "no -2 crossing within 81 trading days of the shift");
    }

    const auto control_dir = scratch("ac7_control");
    const int control_code = run_cli("--synth-spec 4:520" + common + " --out " + control_dir.string());
    c.expect(control_code == kExitOk, "constant-U control exit code " + std::to_string(control_code));
    if (control_code != kExitError) {
        const auto rows = crossing_rows(control_dir);
        c.expect(rows.empty(), "constant-U control crossed the threshold " + std::to_string(rows.size()) +
                                   " time(s)");
    }
    fs::remove_all(shift_dir);
    fs::remove_all(control_dir);
    return c;
}

Check ac8() {
    Check c;
    const auto dir = scratch("ac8");
    RunConfig cfg;
    SynthSpec spec;
    spec.segments = {{4.0, 450}, {1.0, 150}};
    spec.n_tickers = 500;
    cfg.synth = spec;
    cfg.out_dir = dir;
    std::ostringstream log;
    const int code = run_analyze(cfg, log);
    c.expect(code != kExitError, "pipeline failed: " + log.str());
    fs::remove_all(dir);
    return c;
}

Check ac9() {
    Check c;
    const auto a = scratch("ac9_a");
    const auto b = scratch("ac9_b");
    const std::string args = "--synth-spec 4:400,1:120 --seed 7 --out ";
    run_cli(args + a.string());
    run_cli(args + b.string());
    for (const char* name :
         {"panel.csv", "fractions.csv", "useries.csv", "indicator.csv", "report.json", "figure.svg"}) {
        const bool present = fs::exists(a / name) && fs::exists(b / name);
        c.expect(present, std::string(name) + " missing");
        if (present) {
            c.expect(slurp(a / name) == slurp(b / name), std::string(name) + " differs between runs");
        }
    }
    fs::remove_all(a);
    fs::remove_all(b);
    return c;
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Check()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "analytic MLE identities", 1.0, ac1},
        {"AC2", "fit_u agrees with the grid oracle on 20 datasets", 30.0, ac2},
        {"AC3", "recovery of U* within 15%", 5.0, ac3},
        {"AC4", "special-function identities and recurrences", 1.0, ac4},
        {"AC5", "score monotonicity and gradient check", 1.0, ac5},
        {"AC6", "paper arithmetic for drop projections", 1.0, ac6},
        {"AC7", "end-to-end regime shift and constant-U control", 60.0, ac7},
        {"AC8", "500 x 600 pipeline under 10 s", 10.0, ac8},
        {"AC9", "byte-identical artifacts across runs", 60.0, ac9},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = crit.body();
        } catch (const std::exception& e) {
            result.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= crit.budget_s) {
            result.failures.push_back("took " + fmt(secs) + " s, budget " + fmt(crit.budget_s) + " s");
        }
        const bool pass = result.failures.empty();
        failed += pass ? 0 : 1;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << crit.id << ' ' << crit.title << " ("
                  << std::fixed << std::setprecision(3) << secs << " s)\n";
        std::cout.unsetf(std::ios::floatfield);
        for (const auto& why : result.failures) {
            std::cout << "       " << why << '\n';
        }
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
