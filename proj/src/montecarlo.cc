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

#include "purecliff/montecarlo.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

namespace purecliff {

Interval wilson(uint64_t k, uint64_t n) {
    if (n == 0) {
        return {0, 1};
    }
    const double z = 1.959963984540054;
    double p = static_cast<double>(k) / static_cast<double>(n);
    double nn = static_cast<double>(n);
    double denom = 1 + z * z / nn;
    double center = (p + z * z / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
    // exact endpoints at k = 0 and k = n; rounding otherwise leaves p outside
    return {k == 0 ? 0.0 : std::min(p, center - half), k == n ? 1.0 : std::max(p, center + half)};
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, uint64_t t) {
    return splitmix64(splitmix64(seed) ^ t);
}

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("PURECLIFF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return omp_get_num_procs();
}

namespace {

struct Counts {
    uint64_t passes = 0;
    uint64_t matches = 0;
};

inline void one_trial(const Executor &ex, const std::vector<FaultSite> &sites, const NoiseModel &model,
                      uint64_t seed, uint64_t t, FaultAssignment &faults, Counts &c) {
    std::mt19937_64 rng(trial_seed(seed, t));
    sample_faults(sites, model, rng, faults);
    TrajectoryResult r;
    if (faults.empty()) {
        // validated circuits give the same fault-free result for every coin sequence
        r = ex.noiseless();
    } else {
        EngineCoins coins(rng);
        r = ex.run(faults, coins);
    }
    c.passes += r.passed;
    c.matches += r.passed && r.purified_equals_target;
}

void require_valid(const Circuit &circuit) {
    auto diag = validate(circuit);
    if (!diag.empty()) {
        throw ContractError("circuit does not validate: " + diag.front());
    }
}

MonteCarloReport make_report(const std::string &name, const NoiseModel &model, uint64_t trials, uint64_t seed,
                             Counts c) {
    MonteCarloReport r;
    r.protocol = name;
    r.model = model;
    r.trials = trials;
    r.seed = seed;
    r.passes = c.passes;
    r.matches = c.matches;
    r.success = static_cast<double>(c.passes) / static_cast<double>(trials);
    r.ci_success = wilson(c.passes, trials);
    if (c.passes > 0) {
        r.fidelity = static_cast<double>(c.matches) / static_cast<double>(c.passes);
        r.ci_fidelity = wilson(c.matches, c.passes);
    }
    return r;
}

}  // namespace

MonteCarloReport run_mc_serial(const std::string &name, const Circuit &circuit, const NoiseModel &model,
                               uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    require_valid(circuit);
    Executor ex(circuit);
    auto sites = enumerate_fault_sites(circuit, model);
    Counts c;
    FaultAssignment faults;
    for (uint64_t t = 0; t < trials; t++) {
        one_trial(ex, sites, model, seed, t, faults, c);
    }
    return make_report(name, model, trials, seed, c);
}

MonteCarloReport run_mc(const std::string &name, const Circuit &circuit, const NoiseModel &model, uint64_t trials,
                        uint64_t seed, int threads) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    require_valid(circuit);
    Executor ex(circuit);
    auto sites = enumerate_fault_sites(circuit, model);
    int workers = resolve_threads(threads);
    uint64_t passes = 0;
    uint64_t matches = 0;
    auto n = static_cast<int64_t>(trials);
#pragma omp parallel num_threads(workers) reduction(+ : passes, matches)
    {
        Counts local;
        FaultAssignment faults;
#pragma omp for schedule(static)
        for (int64_t t = 0; t < n; t++) {
            one_trial(ex, sites, model, seed, static_cast<uint64_t>(t), faults, local);
        }
        passes += local.passes;
        matches += local.matches;
    }
    return make_report(name, model, trials, seed, Counts{passes, matches});
}

MonteCarloReport run_mc(const ProtocolSpec &protocol, const NoiseModel &model, uint64_t trials, uint64_t seed,
                        int threads) {
    return run_mc(protocol.name, protocol.circuit, model, trials, seed, threads);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string mc_csv_header() {
    return "protocol,eps,p_gate,p_meas,trials,seed,success,success_lo,success_hi,fidelity,fidelity_lo,fidelity_hi";
}

std::string mc_csv_row(const MonteCarloReport &r) {
    std::string s = r.protocol + "," + format_double(r.model.eps) + "," + format_double(r.model.p_gate) + "," +
                    format_double(r.model.p_meas) + "," + std::to_string(r.trials) + "," + std::to_string(r.seed) +
                    "," + format_double(r.success) + "," + format_double(r.ci_success.lo) + "," +
                    format_double(r.ci_success.hi) + ",";
    if (r.fidelity) {
        s += format_double(*r.fidelity) + "," + format_double(r.ci_fidelity->lo) + "," +
             format_double(r.ci_fidelity->hi);
    } else {
        s += "undefined,undefined,undefined";
    }
    return s;
}

}  // namespace purecliff
