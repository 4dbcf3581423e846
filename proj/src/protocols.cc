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

#include "purecliff/protocols.h"

#include <algorithm>
#include <set>

namespace purecliff {

namespace {

GateOp prep_gate(GateKind k, std::vector<uint32_t> qs) {
    return GateOp{k, std::move(qs), GateTag::Prep, std::nullopt};
}

GateOp gate(GateKind k, std::vector<uint32_t> qs, GateTag tag = GateTag::Operational) {
    return GateOp{k, std::move(qs), tag, std::nullopt};
}

StateSpec ghz(uint32_t n, bool rotated) {
    StateSpec s;
    s.name = "GHZ" + std::to_string(n) + (rotated ? "c" : "");
    s.prep.push_back(prep_gate(GateKind::H, {0}));
    for (uint32_t k = 1; k < n; k++) {
        s.prep.push_back(prep_gate(GateKind::CNOT, {0, k}));
    }
    if (rotated) {
        s.prep.push_back(prep_gate(GateKind::H, {0}));
    }
    return s;
}

}  // namespace

StateSpec state_spec(const std::string &name) {
    StateSpec s;
    if (name == "Bell") {
        s = ghz(2, false);
        s.name = "Bell";
    } else if (name == "GHZ3") {
        s = ghz(3, false);
    } else if (name == "GHZ4") {
        s = ghz(4, false);
    } else if (name == "GHZ3c") {
        s = ghz(3, true);
    } else if (name == "GHZ4c") {
        s = ghz(4, true);
    } else if (name == "Cluster4") {
        s.name = name;
        for (uint32_t q = 0; q < 4; q++) {
            s.prep.push_back(prep_gate(GateKind::H, {q}));
        }
        for (uint32_t q = 0; q + 1 < 4; q++) {
            s.prep.push_back(prep_gate(GateKind::CZ, {q, q + 1}));
        }
    } else {
        throw CatalogError("unknown state " + name);
    }
    uint32_t n = 0;
    for (const auto &g : s.prep) {
        for (uint32_t q : g.qubits) {
            n = std::max(n, q + 1);
        }
    }
    StabilizerTableau t(n);
    for (const auto &g : s.prep) {
        t.apply_gate(CliffordGate::make(g.kind, g.qubits));
    }
    t.canonicalize();
    s.tableau = t;
    s.home_qubit = 0;
    return s;
}

GraphForm graph_form(const std::string &state_name) {
    GraphForm g;
    if (state_name == "Cluster4") {
        g.edges = {{0, 1}, {1, 2}, {2, 3}};
        g.hadamard.assign(4, false);
        return g;
    }
    StateSpec s = state_spec(state_name);
    uint32_t n = s.size();
    for (uint32_t k = 1; k < n; k++) {
        g.edges.push_back({0, k});
    }
    // A GHZ state is the star graph with Hadamards on the leaves; the rotated
    // variant carries one more on the center.
    bool rotated = state_name.back() == 'c';
    g.hadamard.assign(n, true);
    g.hadamard[0] = rotated;
    return g;
}

std::vector<CircuitOp> distribute(const StateSpec &state, uint32_t offset) {
    std::vector<CircuitOp> ops;
    for (GateOp g : state.prep) {
        for (auto &q : g.qubits) {
            q += offset;
        }
        ops.push_back(std::move(g));
    }
    TransmitOp t;
    for (uint32_t q = 0; q < state.size(); q++) {
        if (q != state.home_qubit) {
            t.qubits.push_back(offset + q);
        }
    }
    if (!t.qubits.empty()) {
        ops.push_back(std::move(t));
    }
    return ops;
}

std::vector<std::pair<PauliOperator, int>> rank_stabilizers(const StateSpec &state) {
    uint32_t n = state.size();
    std::vector<PauliOperator> gens = state.tableau.stabilizers();
    std::vector<std::pair<PauliOperator, int>> out;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        PauliOperator p(n);
        for (uint32_t i = 0; i < n; i++) {
            if ((mask >> i) & 1) {
                p = multiply(p, gens[i]);
            }
        }
        int count = 0;
        for (uint32_t q = 0; q < n; q++) {
            if (q == state.home_qubit) {
                continue;
            }
            for (char e : {'X', 'Y', 'Z'}) {
                if (!commutes(p, PauliOperator::single(n, q, e))) {
                    count++;
                }
            }
        }
        out.push_back({p, count});
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second) {
            return a.second > b.second;
        }
        std::string la = a.first.str().substr(1);
        std::string lb = b.first.str().substr(1);
        return la < lb;
    });
    return out;
}

std::vector<CircuitOp> build_stabilizer_check(const StateSpec &purified, const PauliOperator &checked,
                                              const StateSpec &sacrifice, const CheckWiring &wiring) {
    if (checked.n_qubits() != purified.size()) {
        throw ConstructionError("checked operator has wrong length");
    }
    // The gadget measures the bare letters; their eigenvalue sets the parity.
    PauliOperator letters = checked;
    letters.set_phase(0);
    FixedCoins coins;
    StabilizerTableau probe = purified.tableau;
    MeasureResult m = probe.measure(letters, coins);
    if (m.random) {
        throw ConstructionError(checked.str() + " is not in the stabilizer group of " + purified.name);
    }
    std::vector<uint32_t> support;
    for (uint32_t q = 0; q < checked.n_qubits(); q++) {
        if (checked.at(q) != 'I') {
            support.push_back(q);
        }
    }
    bool cat = sacrifice.name == "Bell" || sacrifice.name == "GHZ3" || sacrifice.name == "GHZ4";
    if (!cat || sacrifice.size() != support.size()) {
        throw ConstructionError("unsupported support pattern: " + checked.str() + " with sacrifice " +
                                sacrifice.name);
    }
    if (wiring.sacrifice_for.size() != support.size()) {
        throw ConstructionError("wiring must name one sacrifice qubit per support qubit");
    }
    std::set<uint32_t> used(wiring.sacrifice_for.begin(), wiring.sacrifice_for.end());
    if (used.size() != support.size() || *used.rbegin() >= sacrifice.size()) {
        throw ConstructionError("wiring must use each sacrifice qubit exactly once");
    }
    std::vector<CircuitOp> ops;
    for (size_t k = 0; k < support.size(); k++) {
        uint32_t p = wiring.purified_offset + support[k];
        uint32_t s = wiring.sacrifice_offset + wiring.sacrifice_for[k];
        switch (checked.at(support[k])) {
            case 'X':
                ops.push_back(gate(GateKind::CNOT, {s, p}));
                break;
            case 'Z':
                ops.push_back(gate(GateKind::CZ, {s, p}));
                break;
            default:
                // controlled-Y = S . CNOT . S^dagger, with S^dagger = S Z
                ops.push_back(gate(GateKind::Z, {p}));
                ops.push_back(gate(GateKind::S, {p}));
                ops.push_back(gate(GateKind::CNOT, {s, p}));
                ops.push_back(gate(GateKind::S, {p}));
                break;
        }
    }
    ParityCheckOp check;
    check.odd = m.negative;
    for (uint32_t k = 0; k < sacrifice.size(); k++) {
        std::string label = wiring.label_prefix + std::to_string(k);
        ops.push_back(MeasureOp{wiring.sacrifice_offset + k, 'X', label});
        check.labels.push_back(label);
    }
    ops.push_back(check);
    return ops;
}

std::vector<CircuitOp> build_hashing_stage(const GraphForm &graph, const std::vector<bool> &color,
                                           uint32_t purified_offset, uint32_t sacrifice_offset,
                                           const std::string &label_prefix) {
    size_t n = graph.hadamard.size();
    if (color.size() != n) {
        throw ConstructionError("coloring has wrong length");
    }
    std::vector<std::vector<uint32_t>> nbr(n);
    for (auto [a, b] : graph.edges) {
        if (color[a] == color[b]) {
            throw ConstructionError("coloring is not proper");
        }
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    std::vector<CircuitOp> ops;
    std::vector<char> basis(n);
    for (uint32_t i = 0; i < n; i++) {
        uint32_t g = purified_offset + i;
        uint32_t s = sacrifice_offset + i;
        // In the graph frame a checked vertex receives the copy's X and the
        // rest send their Z; a Hadamard frame swaps the two roles.
        if (color[i] != graph.hadamard[i]) {
            ops.push_back(gate(GateKind::CNOT, {s, g}));
            basis[i] = 'X';
        } else {
            ops.push_back(gate(GateKind::CNOT, {g, s}));
            basis[i] = 'Z';
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        ops.push_back(MeasureOp{sacrifice_offset + i, basis[i], label_prefix + std::to_string(i)});
    }
    for (uint32_t a = 0; a < n; a++) {
        if (!color[a]) {
            continue;
        }
        ParityCheckOp check;
        check.labels.push_back(label_prefix + std::to_string(a));
        std::vector<uint32_t> ns = nbr[a];
        std::sort(ns.begin(), ns.end());
        for (uint32_t b : ns) {
            check.labels.push_back(label_prefix + std::to_string(b));
        }
        ops.push_back(check);
    }
    return ops;
}

namespace {

class Builder {
   public:
    uint32_t add(const std::string &name, const StateSpec &s, Role role, std::vector<uint32_t> nodes) {
        uint32_t off = static_cast<uint32_t>(c_.n_qubits());
        Register r;
        r.name = name;
        r.qubit_count = s.size();
        r.home_qubit = s.home_qubit;
        r.role = role;
        r.nodes = std::move(nodes);
        c_.registers.push_back(r);
        c_.initial_states.push_back(StabilizerTableau(s.size()));
        for (auto &op : distribute(s, off)) {
            c_.ops.push_back(std::move(op));
        }
        if (role == Role::Sacrificial) {
            sacs_.push_back(s);
        }
        return off;
    }
    void emit(const std::vector<CircuitOp> &ops) {
        c_.ops.insert(c_.ops.end(), ops.begin(), ops.end());
    }
    void emit(CircuitOp op) {
        c_.ops.push_back(std::move(op));
    }
    ProtocolSpec finish(const std::string &name, const StateSpec &purified) {
        c_.target_state = purified.tableau;
        ProtocolSpec p{name, purified, sacs_, c_};
        auto diag = validate(p.circuit);
        if (!diag.empty()) {
            throw std::logic_error("builtin " + name + " fails validation: " + diag.front());
        }
        return p;
    }

   private:
    Circuit c_;
    std::vector<StateSpec> sacs_;
};

std::vector<uint32_t> identity_nodes(uint32_t n) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; i++) {
        v[i] = i;
    }
    return v;
}

ProtocolSpec hashing(const std::string &name, const std::string &state, const std::vector<int> &stages) {
    StateSpec target = state_spec(state);
    bool is_ghz = state != "Cluster4";
    StateSpec copy = is_ghz ? state_spec(state + "c") : target;
    GraphForm graph = graph_form(copy.name);
    uint32_t n = target.size();
    Builder b;
    uint32_t g = b.add("g", target, Role::Purified, identity_nodes(n));
    std::vector<uint32_t> offs;
    for (size_t k = 0; k < stages.size(); k++) {
        offs.push_back(b.add("s" + std::to_string(k + 1), copy, Role::Sacrificial, identity_nodes(n)));
    }
    if (is_ghz) {
        b.emit(gate(GateKind::H, {g}, GateTag::Frame));
    }
    for (size_t k = 0; k < stages.size(); k++) {
        // Stage 1 checks the color class holding the home qubit, stage 2 the rest.
        std::vector<bool> color(n);
        for (uint32_t i = 0; i < n; i++) {
            bool home_class = is_ghz ? i == 0 : i % 2 == 0;
            color[i] = stages[k] == 1 ? home_class : !home_class;
        }
        b.emit(build_hashing_stage(graph, color, g, offs[k], "s" + std::to_string(k + 1) + "m"));
    }
    if (is_ghz) {
        b.emit(gate(GateKind::H, {g}, GateTag::Frame));
    }
    return b.finish(name, target);
}

ProtocolSpec raw(const std::string &name, const std::string &state) {
    StateSpec s = state_spec(state);
    Builder b;
    b.add("g", s, Role::Purified, identity_nodes(s.size()));
    return b.finish(name, s);
}

CheckWiring wire(uint32_t pur, uint32_t sac, std::vector<uint32_t> map, std::string prefix) {
    return CheckWiring{pur, sac, std::move(map), std::move(prefix)};
}

ProtocolSpec ghz3_het() {
    StateSpec target = state_spec("GHZ3");
    StateSpec bell = state_spec("Bell");
    Builder b;
    uint32_t g = b.add("g", target, Role::Purified, {0, 1, 2});
    uint32_t a = b.add("a", bell, Role::Sacrificial, {1, 2});
    uint32_t p = b.add("b", bell, Role::Sacrificial, {1, 2});
    b.emit(build_stabilizer_check(bell, PauliOperator::parse("ZZ"), bell, wire(a, p, {0, 1}, "b")));
    b.emit(build_stabilizer_check(target, PauliOperator::parse("IZZ"), bell, wire(g, a, {0, 1}, "a")));
    return b.finish("ghz3-het", target);
}

ProtocolSpec ghz4_het() {
    StateSpec target = state_spec("GHZ4");
    StateSpec bell = state_spec("Bell");
    Builder b;
    uint32_t g = b.add("g", target, Role::Purified, {0, 1, 2, 3});
    uint32_t a = b.add("a", bell, Role::Sacrificial, {0, 1});
    uint32_t p = b.add("b", bell, Role::Sacrificial, {0, 1});
    uint32_t c = b.add("c", bell, Role::Sacrificial, {2, 3});
    b.emit(build_stabilizer_check(bell, PauliOperator::parse("ZZ"), bell, wire(a, p, {0, 1}, "b")));
    b.emit(build_stabilizer_check(target, PauliOperator::parse("ZZII"), bell, wire(g, a, {0, 1}, "a")));
    b.emit(build_stabilizer_check(target, PauliOperator::parse("IIZZ"), bell, wire(g, c, {0, 1}, "c")));
    return b.finish("ghz4-het", target);
}

ProtocolSpec cluster4_het() {
    StateSpec target = state_spec("Cluster4");
    StateSpec bell = state_spec("Bell");
    StateSpec cat = state_spec("GHZ3");
    Builder b;
    uint32_t g = b.add("g", target, Role::Purified, {0, 1, 2, 3});
    uint32_t t = b.add("t", cat, Role::Sacrificial, {1, 2, 3});
    uint32_t a = b.add("a", bell, Role::Sacrificial, {3, 2});
    uint32_t p = b.add("b", bell, Role::Sacrificial, {3, 2});
    b.emit(build_stabilizer_check(target, PauliOperator::parse("IZXZ"), cat, wire(g, t, {0, 1, 2}, "t")));
    b.emit(build_stabilizer_check(bell, PauliOperator::parse("ZZ"), bell, wire(a, p, {0, 1}, "b")));
    b.emit(build_stabilizer_check(target, PauliOperator::parse("IIZX"), bell, wire(g, a, {1, 0}, "a")));
    return b.finish("cluster4-het", target);
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"raw-ghz3",    "ghz3-p1",     "ghz3-p2",       "ghz3-p1p2",    "ghz3-het",
            "raw-ghz4",    "ghz4-p1",     "ghz4-p2",       "ghz4-p1p2",    "ghz4-het",
            "raw-cluster4", "cluster4-p1", "cluster4-p2", "cluster4-p1p2", "cluster4-het"};
}

ProtocolSpec builtin(const std::string &name) {
    if (name == "raw-ghz3") return raw(name, "GHZ3");
    if (name == "raw-ghz4") return raw(name, "GHZ4");
    if (name == "raw-cluster4") return raw(name, "Cluster4");
    if (name == "ghz3-het") return ghz3_het();
    if (name == "ghz4-het") return ghz4_het();
    if (name == "cluster4-het") return cluster4_het();
    static const std::pair<const char *, const char *> kFamilies[] = {
        {"ghz3-", "GHZ3"}, {"ghz4-", "GHZ4"}, {"cluster4-", "Cluster4"}};
    for (auto [prefix, state] : kFamilies) {
        std::string p = prefix;
        if (name.rfind(p, 0) != 0) {
            continue;
        }
        std::string rest = name.substr(p.size());
        if (rest == "p1") return hashing(name, state, {1});
        if (rest == "p2") return hashing(name, state, {2});
        if (rest == "p1p2") return hashing(name, state, {1, 2});
    }
    throw CatalogError("unknown protocol " + name);
}

Circuit raw_distribution(const StateSpec &state) {
    Builder b;
    std::vector<uint32_t> nodes(state.size());
    for (uint32_t i = 0; i < state.size(); i++) {
        nodes[i] = i;
    }
    b.add("g", state, Role::Purified, nodes);
    return b.finish("raw", state).circuit;
}

}  // namespace purecliff
