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

#ifndef PURECLIFF_MONTECARLO_H
#define PURECLIFF_MONTECARLO_H

#include <cstdint>
#include <optional>
#include <string>

#include "purecliff/noise.h"
#include "purecliff/protocols.h"

namespace purecliff {

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval at 95%.
Interval wilson(uint64_t successes, uint64_t total);

struct MonteCarloReport {
    std::string protocol;
    NoiseModel model;
    uint64_t trials = 0;
    uint64_t passes = 0;
    uint64_t matches = 0;
    uint64_t seed = 0;
    double success = 0;
    Interval ci_success;
    /// Empty when no trial passed.
    std::optional<double> fidelity;
    std::optional<Interval> ci_fidelity;
};

uint64_t splitmix64(uint64_t x);
/// Seed of the engine used for trial `t`.
uint64_t trial_seed(uint64_t seed, uint64_t t);

/// Worker count: `requested` if positive, else PURECLIFF_THREADS (0 meaning
/// all cores), else all cores.
int resolve_threads(int requested = 0);

MonteCarloReport run_mc(const ProtocolSpec &protocol, const NoiseModel &model, uint64_t trials, uint64_t seed,
                        int threads = 0);
MonteCarloReport run_mc(const std::string &name, const Circuit &circuit, const NoiseModel &model, uint64_t trials,
                        uint64_t seed, int threads = 0);
/// Single-threaded reference; identical output to run_mc.
MonteCarloReport run_mc_serial(const std::string &name, const Circuit &circuit, const NoiseModel &model,
                               uint64_t trials, uint64_t seed);

std::string format_double(double v);
std::string mc_csv_header();
std::string mc_csv_row(const MonteCarloReport &r);

}  // namespace purecliff

#endif
