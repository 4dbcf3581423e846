// Copyright 2026 The purecliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, details underneath.
// Exit status is the number of failed criteria.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle_suite.h"
#include "purecliff/harness.h"

using namespace purecliff;

namespace {

// Tolerances and sizes.
constexpr double kSigmas = 3.0;
constexpr double kPolyTimeLimit = 1.0;         // seconds per expansion
constexpr double kOracleTimeLimit = 300.0;     // seconds
constexpr double kExhaustiveTimeLimit = 600.0;  // seconds
constexpr int kOracleCases = 1000;
constexpr int kOracleShots = 10000;
constexpr uint64_t kExhaustiveTrials = 1000000;
constexpr size_t kExhaustiveMaxSites = 6;
constexpr uint64_t kFigureTrials = 100000;
constexpr uint64_t kSeed = 2026;
constexpr size_t kMaxBranches = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void note(const std::string &s) {
        notes.push_back(s);
    }
    void require(bool ok, const std::string &s) {
        pass &= ok;
        notes.push_back(std::string(ok ? "ok   " : "MISS ") + s);
    }
};

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double binomial_var(double p, uint64_t n) {
    return n ? p * (1 - p) / static_cast<double>(n) : 0;
}

Outcome exact_polynomials() {
    Outcome o;
    NoiseModel m{1e-3, 0, 0, false};
    struct Want {
        const char *name;
        bool check_success;
        LinearPolynomial success;
        LinearPolynomial fidelity;
    };
    auto lp = [](int64_t c, int64_t e) {
        LinearPolynomial p;
        p.constant = c;
        p[Param::Eps] = e;
        return p;
    };
    std::vector<Want> wants = {{"raw-ghz3", false, lp(1, 0), lp(1, -6)},
                               {"ghz3-het", true, lp(1, -10), lp(1, -2)},
                               {"ghz3-p1p2", true, lp(1, -16), lp(1, -2)}};
    for (const auto &w : wants) {
        auto t0 = Clock::now();
        ExpansionReport r = expand(builtin(w.name), m);
        double dt = seconds_since(t0);
        bool ok = r.fidelity == w.fidelity && (!w.check_success || r.success == w.success) && dt < kPolyTimeLimit;
        o.require(ok, std::string(w.name) + ": success = " + r.success.str() + ", fidelity = " + r.fidelity.str() +
                          fmt(" (%.3f s)", dt));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    auto t0 = Clock::now();
    auto st = pctest::run_oracle_suite(kOracleCases, kOracleShots, kSeed);
    double dt = seconds_since(t0);
    o.require(st.failures == 0, std::to_string(st.cases) + " circuits, " + std::to_string(st.failures) +
                                    " mismatches" + (st.failures ? " (" + st.first_failure + ")" : ""));
    o.require(st.chi_cases > 0, std::to_string(st.chi_cases) + " chi-squared comparisons over " +
                                    std::to_string(kOracleShots) + " shots, min p = " + fmt("%.3g", st.min_pvalue));
    o.require(dt < kOracleTimeLimit, fmt("runtime %.1f s", dt));
    return o;
}

// z-score against an exact value; a zero-variance value must be hit exactly
double exact_z(double observed, double exact, uint64_t n) {
    double sigma = std::sqrt(binomial_var(exact, n));
    if (sigma < 1e-9) {
        return std::abs(observed - exact) < 1e-9 ? 0 : INFINITY;
    }
    return (observed - exact) / sigma;
}

Outcome exhaustive_agreement() {
    Outcome o;
    auto t0 = Clock::now();
    size_t covered = 0;
    for (const auto &name : builtin_names()) {
        ProtocolSpec p = builtin(name);
        auto sites = enumerate_fault_sites(p.circuit, NoiseModel{0.01, 0, 0, false});
        if (sites.size() > kExhaustiveMaxSites) {
            o.note("skip " + name + " (" + std::to_string(sites.size()) + " network sites)");
            continue;
        }
        covered++;
        ExactEnumeration ex(p.circuit, kExhaustiveMaxSites);
        for (double eps : {0.005, 0.02}) {
            auto mc = run_mc(p, NoiseModel{eps, 0, 0, false}, kExhaustiveTrials, kSeed);
            double s = ex.success(eps);
            double f = ex.fidelity(eps);
            double zs = exact_z(mc.success, s, mc.trials);
            double zf = exact_z(mc.fidelity.value_or(-1), f, mc.passes);
            bool ok = std::abs(zs) <= kSigmas && std::abs(zf) <= kSigmas;
            o.require(ok, name + fmt(" eps=%g", eps) + fmt(": success %.6f", mc.success) + fmt(" vs %.6f", s) +
                              fmt(" (z=%+.2f)", zs) + fmt(", fidelity %.6f", mc.fidelity.value_or(NAN)) +
                              fmt(" vs %.6f", f) + fmt(" (z=%+.2f)", zf));
        }
    }
    double dt = seconds_since(t0);
    o.require(covered > 0, std::to_string(covered) + " protocols enumerated");
    o.require(dt < kExhaustiveTimeLimit, fmt("runtime %.1f s", dt));
    return o;
}

struct Point {
    double f_in;
    MonteCarloReport a;
    MonteCarloReport b;
};

std::vector<Point> compare(const std::string &a, const std::string &b, const std::vector<double> &f_ins, double p) {
    ProtocolSpec pa = builtin(a), pb = builtin(b);
    std::vector<Point> out;
    uint64_t k = 0;
    for (double f_in : f_ins) {
        double ea = invert_input_fidelity(pa.purified_state, f_in);
        double eb = invert_input_fidelity(pb.purified_state, f_in);
        Point pt{f_in, run_mc(pa, NoiseModel{ea, p, p, false}, kFigureTrials, trial_seed(kSeed, k++)),
                 run_mc(pb, NoiseModel{eb, p, p, false}, kFigureTrials, trial_seed(kSeed, k++))};
        out.push_back(pt);
    }
    return out;
}

// Difference a - b of two estimates in units of their combined standard error.
double z_success(const Point &pt) {
    double s = std::sqrt(binomial_var(pt.a.success, pt.a.trials) + binomial_var(pt.b.success, pt.b.trials));
    double d = pt.a.success - pt.b.success;
    return s > 0 ? d / s : (d == 0 ? 0 : std::copysign(INFINITY, d));
}

double z_fidelity(const Point &pt) {
    double fa = pt.a.fidelity.value_or(NAN), fb = pt.b.fidelity.value_or(NAN);
    double s = std::sqrt(binomial_var(fa, pt.a.passes) + binomial_var(fb, pt.b.passes));
    double d = fa - fb;
    return s > 0 ? d / s : (d == 0 ? 0 : std::copysign(INFINITY, d));
}

std::string describe(const Point &pt) {
    return fmt("f_in=%.3f", pt.f_in) + fmt(": F %.5f", *pt.a.fidelity) + fmt(" vs %.5f", *pt.b.fidelity) +
           fmt(" (z=%+.2f)", z_fidelity(pt)) + fmt(", S %.5f", pt.a.success) + fmt(" vs %.5f", pt.b.success) +
           fmt(" (z=%+.2f)", z_success(pt));
}

const std::vector<double> kFig2Grid = {0.85, 0.88, 0.91, 0.94, 0.97, 0.99, 0.999};

Outcome fig2_panel_a() {
    Outcome o;
    for (const auto &pt : compare("ghz3-het", "ghz3-p1p2", kFig2Grid, 0)) {
        bool ok = z_fidelity(pt) >= -kSigmas && (pt.f_in > 0.97 || z_success(pt) >= kSigmas);
        o.require(ok, describe(pt));
    }
    return o;
}

Outcome fig2_panel_b() {
    Outcome o;
    for (const auto &pt : compare("ghz4-het", "ghz4-p1p2", kFig2Grid, 0)) {
        bool ok = std::abs(z_fidelity(pt)) <= kSigmas && z_success(pt) >= kSigmas;
        o.require(ok, describe(pt));
    }
    return o;
}

Outcome fig2_panel_c() {
    Outcome o;
    for (const auto &pt : compare("cluster4-het", "cluster4-p1p2", kFig2Grid, 0)) {
        bool ok = pt.f_in > 0.95 || z_fidelity(pt) >= kSigmas;
        o.require(ok, describe(pt));
    }
    return o;
}

Outcome fig4() {
    Outcome o;
    for (double p : {1e-3, 1e-2}) {
        for (const auto &pt : compare("ghz3-het", "ghz3-p1p2", {0.9, 0.93, 0.96, 0.99}, p)) {
            o.require(z_fidelity(pt) >= kSigmas, fmt("p=%g ", p) + describe(pt));
        }
    }
    return o;
}

Outcome branch_counts() {
    Outcome o;
    NoiseModel all{1e-3, 1e-3, 1e-3, false};
    for (const auto &name : builtin_names()) {
        ProtocolSpec p = builtin(name);
        size_t alts = 0;
        for (const auto &s : enumerate_fault_sites(p.circuit, all)) alts += s.alternatives.size();
        auto r = expand(p, all);
        o.require(r.branch_count == 1 + alts && r.branch_count < kMaxBranches,
                  name + ": " + std::to_string(r.branch_count) + " branches, 1 + " + std::to_string(alts) +
                      " alternatives");
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    int max_workers = omp_get_num_procs();
    std::vector<int> workers = {1, 4, max_workers};
    NoiseModel m{0.01, 1e-3, 1e-3, false};
    std::vector<std::string> mc, sweep;
    SweepSpec spec;
    spec.protocols = {"ghz3-het", "ghz4-het", "cluster4-p1p2"};
    spec.x_axis = XAxis::InputFidelity;
    spec.x_values = {0.9, 0.97};
    spec.p_gate_values = {0, 1e-3};
    spec.trials = 20000;
    spec.seed = kSeed;
    spec.engine = Engine::Both;
    for (int w : workers) {
        mc.push_back(mc_csv_row(run_mc(builtin("ghz4-p1p2"), m, 200000, kSeed, w)));
        spec.threads = w;
        sweep.push_back(run_sweep(spec).csv);
    }
    for (size_t i = 1; i < workers.size(); i++) {
        o.require(mc[i] == mc[0], "run_mc with " + std::to_string(workers[i]) + " workers equals 1 worker");
        o.require(sweep[i] == sweep[0], "run_sweep with " + std::to_string(workers[i]) + " workers equals 1 worker");
    }
    o.note("max workers = " + std::to_string(max_workers));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"exact first-order polynomials", exact_polynomials},
        {"oracle equivalence (tableau vs state vector)", oracle_equivalence},
        {"exhaustive enumeration vs Monte Carlo", exhaustive_agreement},
        {"fig2 (a) ghz3-het vs ghz3-p1p2", fig2_panel_a},
        {"fig2 (b) ghz4-het vs ghz4-p1p2", fig2_panel_b},
        {"fig2 (c) cluster4-het vs cluster4-p1p2", fig2_panel_c},
        {"fig4 ghz3-het vs ghz3-p1p2 under gate noise", fig4},
        {"branch-count bound", branch_counts},
        {"determinism across worker counts", determinism},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto t0 = Clock::now();
        Outcome o = c.run();
        failed += !o.pass;
        std::printf("%s  %s  (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.name, seconds_since(t0));
        for (const auto &n : o.notes) std::printf("      %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
