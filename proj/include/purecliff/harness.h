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

#ifndef PURECLIFF_HARNESS_H
#define PURECLIFF_HARNESS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purecliff/montecarlo.h"
#include "purecliff/perturbative.h"
#include "purecliff/protocols.h"

namespace purecliff {

/// Exact fidelity of the raw distribution of `state` at network error `eps`.
double raw_fidelity(const StateSpec &state, double eps);

/// The eps in [0, 1/3] at which the raw distribution of `state` has fidelity
/// `f_in`, to 1e-12, taken on the decreasing branch from 0. Throws
/// std::domain_error outside (f(1/3), 1].
double invert_input_fidelity(const StateSpec &state, double f_in);

enum class XAxis : uint8_t { Eps, InputFidelity };
enum class Engine : uint8_t { MonteCarlo, Perturbative, Both };
const char *x_axis_name(XAxis a);
const char *engine_name(Engine e);
std::optional<XAxis> x_axis_from_name(const std::string &s);
std::optional<Engine> engine_from_name(const std::string &s);

struct SweepSpec {
    std::vector<std::string> protocols;
    XAxis x_axis = XAxis::Eps;
    std::vector<double> x_values;
    std::vector<double> p_gate_values{0.0};
    /// Empty: p_meas follows p_gate at each point.
    std::vector<double> p_meas_values;
    uint64_t trials = 100000;
    uint64_t seed = 0;
    Engine engine = Engine::MonteCarlo;
    bool noisy_prep = false;
    int threads = 0;
    double allowance = 50;
};

struct SweepResult {
    std::string csv;
    size_t rows = 0;
    /// Some mc/perturbative pair disagrees beyond the allowance.
    bool flagged = false;
};

std::string sweep_csv_header();

/// Rows in spec order: protocol, x, p_gate, p_meas, then engine. Unknown
/// protocol names throw CatalogError before anything runs.
SweepResult run_sweep(const SweepSpec &spec);

}  // namespace purecliff

#endif
