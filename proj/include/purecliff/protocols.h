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

#ifndef PURECLIFF_PROTOCOLS_H
#define PURECLIFF_PROTOCOLS_H

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "purecliff/circuit.h"

namespace purecliff {

struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StateSpec {
    std::string name;
    StabilizerTableau tableau;
    uint32_t home_qubit = 0;
    /// Gates preparing the state from |0...0>, on local indices.
    std::vector<GateOp> prep;

    uint32_t size() const {
        return static_cast<uint32_t>(tableau.n_qubits());
    }
};

/// "Bell", "GHZ3", "GHZ4", "Cluster4", "GHZ3c" or "GHZ4c". The c variants are
/// GHZ states with a Hadamard on qubit 0.
StateSpec state_spec(const std::string &name);

struct ProtocolSpec {
    std::string name;
    StateSpec purified_state;
    std::vector<StateSpec> sacrificial_states;
    Circuit circuit;
};

/// Prep gates (tagged prep) followed by one transmission of every non-home
/// qubit. Indices are shifted by `offset`.
std::vector<CircuitOp> distribute(const StateSpec &state, uint32_t offset = 0);

/// Every non-identity element of the stabilizer group with the number of
/// single-qubit X/Y/Z errors on transmitted qubits that anticommute with it.
/// Sorted by count, descending, then by Pauli letters (I < X < Y < Z).
std::vector<std::pair<PauliOperator, int>> rank_stabilizers(const StateSpec &state);

struct CheckWiring {
    uint32_t purified_offset = 0;
    uint32_t sacrifice_offset = 0;
    /// Sacrifice-local qubit attached to each support qubit of the checked
    /// operator, in ascending support order.
    std::vector<uint32_t> sacrifice_for;
    std::string label_prefix = "m";
};

/// Cat-state check of `checked` using a GHZ-type sacrifice whose size equals
/// the support weight: controlled-P from each sacrifice qubit onto its
/// purified qubit, X measurement of every sacrifice qubit, one parity check.
std::vector<CircuitOp> build_stabilizer_check(const StateSpec &purified, const PauliOperator &checked,
                                              const StateSpec &sacrifice, const CheckWiring &wiring);

/// One stage of the two-colorable hashing step: checks the graph stabilizers
/// of the qubits in `color` using a full copy of the purified graph state.
/// `hadamard[i]` marks qubits whose frame differs from the graph frame by H.
struct GraphForm {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<bool> hadamard;
};
GraphForm graph_form(const std::string &state_name);
std::vector<CircuitOp> build_hashing_stage(const GraphForm &graph, const std::vector<bool> &color,
                                           uint32_t purified_offset, uint32_t sacrifice_offset,
                                           const std::string &label_prefix);

std::vector<std::string> builtin_names();
/// Throws CatalogError for unknown names.
ProtocolSpec builtin(const std::string &name);
/// Raw distribution circuit for any cataloged state.
Circuit raw_distribution(const StateSpec &state);

}  // namespace purecliff

#endif
