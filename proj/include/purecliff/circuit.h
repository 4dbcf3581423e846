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

#ifndef PURECLIFF_CIRCUIT_H
#define PURECLIFF_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "purecliff/tableau.h"

namespace purecliff {

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Role : uint8_t { Purified, Sacrificial };

struct Register {
    std::string name;
    uint32_t qubit_count = 0;
    uint32_t home_qubit = 0;
    Role role = Role::Sacrificial;
    /// Network node hosting each qubit (after distribution).
    std::vector<uint32_t> nodes;

    bool operator==(const Register &) const = default;
};

/// Prep gates build entangled resources before transmission, frame gates are
/// basis changes on noiseless home qubits; neither attracts gate noise unless
/// prep noise is switched on.
enum class GateTag : uint8_t { Operational, Prep, Frame };

struct Condition {
    std::string label;
    bool value = true;
    bool operator==(const Condition &) const = default;
};

struct GateOp {
    GateKind kind;
    std::vector<uint32_t> qubits;
    GateTag tag = GateTag::Operational;
    std::optional<Condition> condition;
    bool operator==(const GateOp &) const = default;
};

struct TransmitOp {
    std::vector<uint32_t> qubits;
    bool operator==(const TransmitOp &) const = default;
};

struct NoisySiteOp {
    std::string channel;  // "eps" or "p_gate"
    std::vector<uint32_t> qubits;
    bool operator==(const NoisySiteOp &) const = default;
};

struct MeasureOp {
    uint32_t qubit;
    char basis;  // 'X', 'Y' or 'Z'
    std::string label;
    bool operator==(const MeasureOp &) const = default;
};

struct ParityCheckOp {
    std::vector<std::string> labels;
    bool odd = false;
    bool operator==(const ParityCheckOp &) const = default;
};

using CircuitOp = std::variant<GateOp, TransmitOp, NoisySiteOp, MeasureOp, ParityCheckOp>;

struct Circuit {
    std::vector<Register> registers;
    std::vector<StabilizerTableau> initial_states;
    StabilizerTableau target_state;
    std::vector<CircuitOp> ops;
    std::vector<uint32_t> discarded;

    size_t n_qubits() const;
    /// First global index of register r.
    uint32_t offset(size_t r) const;
    /// Global qubit indices of every purified register, ascending.
    std::vector<uint32_t> purified_qubits() const;
    uint32_t node_of(uint32_t q) const;
    size_t register_of(uint32_t q) const;

    bool operator==(const Circuit &other) const;
};

/// One realized fault. For network, gate and noisy sites `qubits` names the
/// qubits hit and `error` acts on them in order; for measurement sites only
/// `flip` matters.
struct FaultEvent {
    size_t op_index = 0;
    std::vector<uint32_t> qubits;
    PauliOperator error;
    bool flip = false;
};

using FaultAssignment = std::vector<FaultEvent>;

struct TrajectoryResult {
    bool passed = false;
    bool purified_equals_target = false;
    bool operator==(const TrajectoryResult &) const = default;
};

/// Structural checks plus the noiseless idempotence run.
std::vector<std::string> validate(const Circuit &circuit);
/// Structural checks only.
std::vector<std::string> validate_structure(const Circuit &circuit);

/// Precompiled executor; immutable and safe to share between threads.
class Executor {
   public:
    explicit Executor(const Circuit &circuit);

    TrajectoryResult run(const FaultAssignment &faults, CoinSource &coins) const;
    /// Result of the fault-free run, computed with all coins false.
    TrajectoryResult noiseless() const {
        return noiseless_;
    }
    const Circuit &circuit() const {
        return circuit_;
    }

   private:
    Circuit circuit_;
    StabilizerTableau initial_;
    std::vector<uint32_t> purified_;
    std::vector<PauliOperator> target_canonical_;
    // Per op: index of the measurement slot for MeasureOp, label slots for
    // ParityCheckOp and the condition slot for conditional gates.
    std::vector<int32_t> measure_slot_;
    std::vector<std::vector<int32_t>> check_slots_;
    std::vector<int32_t> condition_slot_;
    size_t n_measurements_ = 0;
    TrajectoryResult noiseless_;
};

TrajectoryResult execute(const Circuit &circuit, const FaultAssignment &faults, CoinSource &coins);

/// Runs the circuit once with all coins false and once more per coin with that
/// coin flipped. Returns the common result, or nullopt if any run differs.
std::optional<TrajectoryResult> run_coin_independent(const Executor &ex, const FaultAssignment &faults);

}  // namespace purecliff

#endif
