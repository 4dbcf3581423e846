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

#include "purecliff/circuit.h"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace purecliff {

size_t Circuit::n_qubits() const {
    size_t n = 0;
    for (const auto &r : registers) {
        n += r.qubit_count;
    }
    return n;
}

uint32_t Circuit::offset(size_t r) const {
    uint32_t off = 0;
    for (size_t i = 0; i < r; i++) {
        off += registers[i].qubit_count;
    }
    return off;
}

std::vector<uint32_t> Circuit::purified_qubits() const {
    std::vector<uint32_t> out;
    uint32_t off = 0;
    for (const auto &r : registers) {
        if (r.role == Role::Purified) {
            for (uint32_t k = 0; k < r.qubit_count; k++) {
                out.push_back(off + k);
            }
        }
        off += r.qubit_count;
    }
    return out;
}

size_t Circuit::register_of(uint32_t q) const {
    uint32_t off = 0;
    for (size_t i = 0; i < registers.size(); i++) {
        if (q < off + registers[i].qubit_count) {
            return i;
        }
        off += registers[i].qubit_count;
    }
    throw DimensionError("qubit " + std::to_string(q) + " out of range");
}

uint32_t Circuit::node_of(uint32_t q) const {
    size_t r = register_of(q);
    return registers[r].nodes.at(q - offset(r));
}

bool Circuit::operator==(const Circuit &other) const {
    if (registers != other.registers || ops != other.ops || discarded != other.discarded ||
        initial_states.size() != other.initial_states.size()) {
        return false;
    }
    for (size_t i = 0; i < initial_states.size(); i++) {
        if (initial_states[i].stabilizers() != other.initial_states[i].stabilizers()) {
            return false;
        }
    }
    return target_state.stabilizers() == other.target_state.stabilizers();
}

namespace {

std::string at_op(size_t i) {
    return "op " + std::to_string(i) + ": ";
}

}  // namespace

std::vector<std::string> validate_structure(const Circuit &c) {
    std::vector<std::string> diag;
    if (c.registers.empty()) {
        diag.push_back("circuit has no registers");
        return diag;
    }
    size_t purified = 0;
    for (const auto &r : c.registers) {
        if (r.qubit_count == 0) {
            diag.push_back("register " + r.name + " has no qubits");
        }
        if (r.home_qubit >= r.qubit_count) {
            diag.push_back("register " + r.name + " home qubit out of range");
        }
        if (r.nodes.size() != r.qubit_count) {
            diag.push_back("register " + r.name + " node list length differs from qubit count");
        }
        if (r.role == Role::Purified) {
            purified += r.qubit_count;
        }
    }
    if (!diag.empty()) {
        return diag;
    }
    if (purified == 0) {
        diag.push_back("circuit has no purified register");
    }
    if (c.initial_states.size() != c.registers.size()) {
        diag.push_back("expected one initial state per register");
    } else {
        for (size_t i = 0; i < c.registers.size(); i++) {
            if (c.initial_states[i].n_qubits() != c.registers[i].qubit_count) {
                diag.push_back("initial state of register " + c.registers[i].name + " has wrong size");
            }
        }
    }
    if (c.target_state.n_qubits() != purified) {
        diag.push_back("target state size differs from purified qubit count");
    }
    size_t n = c.n_qubits();
    std::vector<uint32_t> loc(n);
    std::vector<bool> is_home(n, false);
    std::vector<bool> purified_q(n, false);
    for (size_t r = 0; r < c.registers.size(); r++) {
        uint32_t off = c.offset(r);
        const auto &reg = c.registers[r];
        for (uint32_t k = 0; k < reg.qubit_count; k++) {
            loc[off + k] = reg.nodes[reg.home_qubit];
            purified_q[off + k] = reg.role == Role::Purified;
        }
        is_home[off + reg.home_qubit] = true;
    }
    std::vector<bool> measured(n, false);
    std::vector<bool> transmitted(n, false);
    std::set<std::string> labels;
    auto check_qubits = [&](size_t i, const std::vector<uint32_t> &qs) {
        bool ok = true;
        for (uint32_t q : qs) {
            if (q >= n) {
                diag.push_back(at_op(i) + "qubit " + std::to_string(q) + " out of range");
                ok = false;
            } else if (measured[q]) {
                diag.push_back(at_op(i) + "qubit " + std::to_string(q) + " used after measurement");
                ok = false;
            }
        }
        return ok;
    };
    for (size_t i = 0; i < c.ops.size(); i++) {
        const CircuitOp &op = c.ops[i];
        if (const auto *g = std::get_if<GateOp>(&op)) {
            if (g->qubits.size() != gate_arity(g->kind)) {
                diag.push_back(at_op(i) + std::string(gate_name(g->kind)) + " has wrong number of targets");
                continue;
            }
            if (!check_qubits(i, g->qubits)) {
                continue;
            }
            if (g->qubits.size() == 2) {
                if (g->qubits[0] == g->qubits[1]) {
                    diag.push_back(at_op(i) + "two-qubit gate with repeated target");
                } else if (loc[g->qubits[0]] != loc[g->qubits[1]]) {
                    diag.push_back(at_op(i) + "non-local gate between nodes " + std::to_string(loc[g->qubits[0]]) +
                                   " and " + std::to_string(loc[g->qubits[1]]));
                }
            }
            if (g->condition && !labels.count(g->condition->label)) {
                diag.push_back(at_op(i) + "condition references unknown label " + g->condition->label);
            }
        } else if (const auto *t = std::get_if<TransmitOp>(&op)) {
            if (!check_qubits(i, t->qubits)) {
                continue;
            }
            for (uint32_t q : t->qubits) {
                if (is_home[q]) {
                    diag.push_back(at_op(i) + "home qubit " + std::to_string(q) + " is transmitted");
                } else if (transmitted[q]) {
                    diag.push_back(at_op(i) + "qubit " + std::to_string(q) + " transmitted twice");
                }
                transmitted[q] = true;
                loc[q] = c.node_of(q);
            }
        } else if (const auto *s = std::get_if<NoisySiteOp>(&op)) {
            if (s->channel != "eps" && s->channel != "p_gate") {
                diag.push_back(at_op(i) + "unknown noise channel " + s->channel);
            }
            if (s->qubits.empty() || s->qubits.size() > 2 || (s->channel == "eps" && s->qubits.size() != 1)) {
                diag.push_back(at_op(i) + "noise site has unsupported arity");
            }
            check_qubits(i, s->qubits);
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            if (!check_qubits(i, {m->qubit})) {
                continue;
            }
            if (m->basis != 'X' && m->basis != 'Y' && m->basis != 'Z') {
                diag.push_back(at_op(i) + "unknown measurement basis");
            }
            if (m->label.empty() || labels.count(m->label)) {
                diag.push_back(at_op(i) + "measurement label \"" + m->label + "\" is empty or reused");
            }
            if (purified_q[m->qubit]) {
                diag.push_back(at_op(i) + "purified qubit " + std::to_string(m->qubit) + " is measured");
            }
            labels.insert(m->label);
            measured[m->qubit] = true;
        } else if (const auto *p = std::get_if<ParityCheckOp>(&op)) {
            if (p->labels.empty()) {
                diag.push_back(at_op(i) + "parity check with no labels");
            }
            for (const auto &l : p->labels) {
                if (!labels.count(l)) {
                    diag.push_back(at_op(i) + "parity check references unknown label " + l);
                }
            }
        }
    }
    std::vector<bool> dropped(n, false);
    for (uint32_t q : c.discarded) {
        if (q >= n) {
            diag.push_back("discarded qubit " + std::to_string(q) + " out of range");
        } else {
            dropped[q] = true;
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (!purified_q[q] && !measured[q] && !dropped[q]) {
            diag.push_back("sacrificial qubit " + std::to_string(q) + " is neither measured nor discarded");
        }
    }
    return diag;
}

std::vector<std::string> validate(const Circuit &c) {
    std::vector<std::string> diag = validate_structure(c);
    if (!diag.empty()) {
        return diag;
    }
    Executor ex(c);
    auto r = run_coin_independent(ex, {});
    if (!r) {
        diag.push_back("noiseless outcome depends on random measurement outcomes");
        return diag;
    }
    if (!r->passed) {
        diag.push_back("noiseless run fails a parity check");
    }
    if (!r->purified_equals_target) {
        diag.push_back("noiseless run does not reproduce the target state");
    }
    return diag;
}

Executor::Executor(const Circuit &circuit) : circuit_(circuit) {
    auto diag = validate_structure(circuit);
    if (!diag.empty()) {
        throw ContractError("invalid circuit: " + diag.front());
    }
    initial_ = StabilizerTableau::tensor(circuit.initial_states);
    purified_ = circuit.purified_qubits();
    target_canonical_ = canonical_generators(circuit.target_state.stabilizers());
    std::unordered_map<std::string, int32_t> slot;
    measure_slot_.assign(circuit.ops.size(), -1);
    check_slots_.assign(circuit.ops.size(), {});
    condition_slot_.assign(circuit.ops.size(), -1);
    for (size_t i = 0; i < circuit.ops.size(); i++) {
        const CircuitOp &op = circuit.ops[i];
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            measure_slot_[i] = static_cast<int32_t>(n_measurements_);
            slot[m->label] = static_cast<int32_t>(n_measurements_++);
        } else if (const auto *p = std::get_if<ParityCheckOp>(&op)) {
            for (const auto &l : p->labels) {
                check_slots_[i].push_back(slot.at(l));
            }
        } else if (const auto *g = std::get_if<GateOp>(&op)) {
            if (g->condition) {
                condition_slot_[i] = slot.at(g->condition->label);
            }
        }
    }
    FixedCoins coins;
    noiseless_ = run({}, coins);
}

namespace {

void check_event(const Circuit &c, const FaultEvent &e) {
    if (e.op_index >= c.ops.size()) {
        throw ContractError("fault at op " + std::to_string(e.op_index) + " is out of range");
    }
    const CircuitOp &op = c.ops[e.op_index];
    std::string where = "fault at op " + std::to_string(e.op_index);
    if (std::holds_alternative<MeasureOp>(op)) {
        if (!e.qubits.empty()) {
            throw ContractError(where + ": measurement sites carry no Pauli error");
        }
        return;
    }
    if (e.flip) {
        throw ContractError(where + ": only measurement sites flip bits");
    }
    if (e.error.n_qubits() != e.qubits.size()) {
        throw ContractError(where + ": error length differs from qubit list");
    }
    if (const auto *t = std::get_if<TransmitOp>(&op)) {
        if (e.qubits.size() != 1 || std::find(t->qubits.begin(), t->qubits.end(), e.qubits[0]) == t->qubits.end()) {
            throw ContractError(where + ": network faults hit one transmitted qubit");
        }
    } else if (const auto *g = std::get_if<GateOp>(&op)) {
        if (e.qubits != g->qubits) {
            throw ContractError(where + ": gate fault qubits differ from gate targets");
        }
    } else if (const auto *s = std::get_if<NoisySiteOp>(&op)) {
        if (e.qubits != s->qubits) {
            throw ContractError(where + ": noise site qubits differ");
        }
    } else {
        throw ContractError(where + ": parity checks are not fault sites");
    }
}

}  // namespace

TrajectoryResult Executor::run(const FaultAssignment &faults, CoinSource &coins) const {
    for (size_t k = 0; k < faults.size(); k++) {
        check_event(circuit_, faults[k]);
        if (k > 0 && faults[k].op_index < faults[k - 1].op_index) {
            throw ContractError("fault assignment must be ordered by op index");
        }
    }
    StabilizerTableau tab = initial_;
    std::vector<uint8_t> bits(n_measurements_, 0);
    bool passed = true;
    size_t next_fault = 0;
    const auto &ops = circuit_.ops;
    for (size_t i = 0; i < ops.size(); i++) {
        const CircuitOp &op = ops[i];
        if (const auto *g = std::get_if<GateOp>(&op)) {
            if (condition_slot_[i] >= 0 && bits[condition_slot_[i]] != static_cast<uint8_t>(g->condition->value)) {
                // skipped conditional gate
            } else {
                tab.apply_gate(CliffordGate::make(g->kind, g->qubits));
            }
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            bits[measure_slot_[i]] = tab.measure_qubit(m->qubit, m->basis, coins).negative;
        } else if (const auto *p = std::get_if<ParityCheckOp>(&op)) {
            uint8_t parity = 0;
            for (int32_t s : check_slots_[i]) {
                parity ^= bits[s];
            }
            if (parity != static_cast<uint8_t>(p->odd)) {
                passed = false;
            }
        }
        for (; next_fault < faults.size() && faults[next_fault].op_index == i; next_fault++) {
            const FaultEvent &e = faults[next_fault];
            if (measure_slot_[i] >= 0) {
                bits[measure_slot_[i]] ^= static_cast<uint8_t>(e.flip);
            } else {
                tab.apply_pauli_on(e.error, e.qubits);
            }
        }
    }
    TrajectoryResult r;
    r.passed = passed;
    auto sub = tab.restricted_generators(purified_);
    r.purified_equals_target = sub.has_value() && *sub == target_canonical_;
    return r;
}

TrajectoryResult execute(const Circuit &circuit, const FaultAssignment &faults, CoinSource &coins) {
    Executor ex(circuit);
    return ex.run(faults, coins);
}

std::optional<TrajectoryResult> run_coin_independent(const Executor &ex, const FaultAssignment &faults) {
    FixedCoins base;
    TrajectoryResult r0 = ex.run(faults, base);
    for (size_t j = 0; j < base.used(); j++) {
        std::vector<bool> coins(j + 1, false);
        coins[j] = true;
        FixedCoins alt(coins);
        if (!(ex.run(faults, alt) == r0)) {
            return std::nullopt;
        }
    }
    return r0;
}

}  // namespace purecliff
