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

#ifndef PURECLIFF_NOISE_H
#define PURECLIFF_NOISE_H

#include <random>
#include <string>
#include <vector>

#include "purecliff/circuit.h"
#include "purecliff/rational.h"

namespace purecliff {

struct NoiseModel {
    double eps = 0;     // per-Pauli network error probability
    double p_gate = 0;  // total depolarization probability per gate
    double p_meas = 0;  // classical flip probability per measurement
    bool noisy_prep = false;

    double value(Param p) const {
        return p == Param::Eps ? eps : p == Param::PGate ? p_gate : p_meas;
    }
    /// Throws std::domain_error when a parameter is out of range.
    void check() const;
};

enum class SiteKind : uint8_t { Network, Gate, Measurement };

struct FaultAlternative {
    PauliOperator error;  // on the site's qubits
    bool flip = false;
    Rational coeff;  // first-order weight is coeff * parameter
};

struct FaultSite {
    size_t op_index = 0;
    SiteKind kind = SiteKind::Network;
    std::vector<uint32_t> qubits;
    std::string label;  // measurement label for measurement sites
    Param param = Param::Eps;
    std::vector<FaultAlternative> alternatives;

    FaultEvent event(size_t alt) const;
    /// Exact probability of each individual alternative under `model`.
    double alternative_probability(const NoiseModel &model) const {
        return model.value(param) * alternatives.front().coeff.to_double();
    }
};

/// Sites in op order, then qubit order. Parameters equal to zero contribute no
/// sites. Gate sites attach to operational gates (and prep gates when
/// `noisy_prep`), never to frame changes or conditional corrections.
std::vector<FaultSite> enumerate_fault_sites(const Circuit &circuit, const NoiseModel &model);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform53(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Draws one alternative (or none) independently per site with exact
/// probabilities. Consumes exactly one engine draw per site.
void sample_faults(const std::vector<FaultSite> &sites, const NoiseModel &model, std::mt19937_64 &rng,
                   FaultAssignment &out);
FaultAssignment sample_faults(const std::vector<FaultSite> &sites, const NoiseModel &model, std::mt19937_64 &rng);

}  // namespace purecliff

#endif
