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

#include "purecliff/circuit_io.h"

#include <sstream>

#include <yaml-cpp/yaml.h>

namespace purecliff {

namespace {

template <typename T>
std::string join(const std::vector<T> &xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); i++) {
        if (i) {
            s += ", ";
        }
        if constexpr (std::is_same_v<T, std::string>) {
            s += xs[i];
        } else {
            s += std::to_string(xs[i]);
        }
    }
    return s + "]";
}

std::string rows(const StabilizerTableau &t) {
    std::vector<std::string> out;
    for (const auto &p : t.stabilizers()) {
        out.push_back("\"" + p.str() + "\"");
    }
    return join(out);
}

const char *tag_name(GateTag t) {
    switch (t) {
        case GateTag::Prep:
            return "prep";
        case GateTag::Frame:
            return "frame";
        default:
            return "operational";
    }
}

}  // namespace

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    out << "format: " << kCircuitFormat << "\n";
    out << "registers:\n";
    for (const auto &r : c.registers) {
        out << "  - {name: " << r.name << ", role: " << (r.role == Role::Purified ? "purified" : "sacrificial")
            << ", qubits: " << r.qubit_count << ", home: " << r.home_qubit << ", nodes: " << join(r.nodes) << "}\n";
    }
    out << "initial_states:\n";
    for (const auto &t : c.initial_states) {
        out << "  - " << rows(t) << "\n";
    }
    out << "target: " << rows(c.target_state) << "\n";
    out << "discarded: " << join(c.discarded) << "\n";
    out << "ops:\n";
    for (const auto &op : c.ops) {
        out << "  - {";
        if (const auto *g = std::get_if<GateOp>(&op)) {
            out << "op: gate, kind: " << gate_name(g->kind) << ", qubits: " << join(g->qubits)
                << ", tag: " << tag_name(g->tag);
            if (g->condition) {
                out << ", if: " << g->condition->label << ", value: " << (g->condition->value ? 1 : 0);
            }
        } else if (const auto *t = std::get_if<TransmitOp>(&op)) {
            out << "op: transmit, qubits: " << join(t->qubits);
        } else if (const auto *s = std::get_if<NoisySiteOp>(&op)) {
            out << "op: noise, channel: " << s->channel << ", qubits: " << join(s->qubits);
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            out << "op: measure, qubit: " << m->qubit << ", basis: " << m->basis << ", label: " << m->label;
        } else if (const auto *p = std::get_if<ParityCheckOp>(&op)) {
            out << "op: check, labels: " << join(p->labels) << ", parity: " << (p->odd ? "odd" : "even");
        }
        out << "}\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void fail(const YAML::Node &n, const std::string &what) {
    YAML::Mark m = n.Mark();
    throw ParseError(what, m.line + 1, m.column + 1);
}

YAML::Node need(const YAML::Node &parent, const char *key) {
    YAML::Node n = parent[key];
    if (!n) {
        fail(parent, std::string("missing key '") + key + "'");
    }
    return n;
}

template <typename T>
T scalar(const YAML::Node &n, const char *what) {
    if (!n.IsScalar()) {
        fail(n, std::string(what) + " must be a scalar");
    }
    try {
        return n.as<T>();
    } catch (const YAML::Exception &) {
        fail(n, std::string("bad value for ") + what + ": " + n.Scalar());
    }
}

std::vector<uint32_t> index_list(const YAML::Node &n, const char *what) {
    if (!n.IsSequence()) {
        fail(n, std::string(what) + " must be a list");
    }
    std::vector<uint32_t> out;
    for (const auto &e : n) {
        out.push_back(scalar<uint32_t>(e, what));
    }
    return out;
}

StabilizerTableau tableau(const YAML::Node &n) {
    if (!n.IsSequence()) {
        fail(n, "stabilizer list expected");
    }
    std::vector<PauliOperator> ps;
    for (const auto &e : n) {
        try {
            ps.push_back(PauliOperator::parse(scalar<std::string>(e, "stabilizer")));
        } catch (const std::invalid_argument &ex) {
            fail(e, ex.what());
        }
    }
    try {
        return StabilizerTableau::from_stabilizers(ps);
    } catch (const std::invalid_argument &ex) {
        fail(n, ex.what());
    }
}

CircuitOp parse_op(const YAML::Node &n) {
    if (!n.IsMap()) {
        fail(n, "op must be a mapping");
    }
    std::string kind = scalar<std::string>(need(n, "op"), "op");
    if (kind == "gate") {
        GateOp g;
        YAML::Node k = need(n, "kind");
        auto gk = gate_from_name(scalar<std::string>(k, "kind"));
        if (!gk) {
            fail(k, "unknown gate kind " + k.Scalar());
        }
        g.kind = *gk;
        g.qubits = index_list(need(n, "qubits"), "qubits");
        std::string tag = n["tag"] ? scalar<std::string>(n["tag"], "tag") : "operational";
        if (tag == "prep") {
            g.tag = GateTag::Prep;
        } else if (tag == "frame") {
            g.tag = GateTag::Frame;
        } else if (tag == "operational") {
            g.tag = GateTag::Operational;
        } else {
            fail(n["tag"], "unknown gate tag " + tag);
        }
        if (n["if"]) {
            g.condition = Condition{scalar<std::string>(n["if"], "if"),
                                    n["value"] ? scalar<int>(n["value"], "value") != 0 : true};
        }
        return g;
    }
    if (kind == "transmit") {
        return TransmitOp{index_list(need(n, "qubits"), "qubits")};
    }
    if (kind == "noise") {
        return NoisySiteOp{scalar<std::string>(need(n, "channel"), "channel"), index_list(need(n, "qubits"), "qubits")};
    }
    if (kind == "measure") {
        MeasureOp m;
        m.qubit = scalar<uint32_t>(need(n, "qubit"), "qubit");
        YAML::Node b = need(n, "basis");
        std::string basis = scalar<std::string>(b, "basis");
        if (basis != "X" && basis != "Y" && basis != "Z") {
            fail(b, "unknown basis " + basis);
        }
        m.basis = basis[0];
        m.label = scalar<std::string>(need(n, "label"), "label");
        return m;
    }
    if (kind == "check") {
        ParityCheckOp p;
        YAML::Node ls = need(n, "labels");
        if (!ls.IsSequence()) {
            fail(ls, "labels must be a list");
        }
        for (const auto &l : ls) {
            p.labels.push_back(scalar<std::string>(l, "label"));
        }
        std::string parity = n["parity"] ? scalar<std::string>(n["parity"], "parity") : "even";
        if (parity != "even" && parity != "odd") {
            fail(n["parity"], "parity must be even or odd");
        }
        p.odd = parity == "odd";
        return p;
    }
    fail(n["op"], "unknown op " + kind);
}

}  // namespace

Circuit deserialize(const std::string &text) {
    YAML::Node doc;
    try {
        doc = YAML::Load(text);
    } catch (const YAML::ParserException &e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    if (!doc.IsMap()) {
        throw ParseError("document must be a mapping", 1, 1);
    }
    YAML::Node fmt = need(doc, "format");
    if (scalar<std::string>(fmt, "format") != kCircuitFormat) {
        fail(fmt, "unsupported format " + fmt.Scalar());
    }
    Circuit c;
    YAML::Node regs = need(doc, "registers");
    if (!regs.IsSequence()) {
        fail(regs, "registers must be a list");
    }
    for (const auto &r : regs) {
        Register reg;
        reg.name = scalar<std::string>(need(r, "name"), "name");
        YAML::Node role = need(r, "role");
        std::string rs = scalar<std::string>(role, "role");
        if (rs != "purified" && rs != "sacrificial") {
            fail(role, "unknown role " + rs);
        }
        reg.role = rs == "purified" ? Role::Purified : Role::Sacrificial;
        reg.qubit_count = scalar<uint32_t>(need(r, "qubits"), "qubits");
        reg.home_qubit = scalar<uint32_t>(need(r, "home"), "home");
        reg.nodes = index_list(need(r, "nodes"), "nodes");
        c.registers.push_back(reg);
    }
    YAML::Node init = need(doc, "initial_states");
    if (!init.IsSequence()) {
        fail(init, "initial_states must be a list");
    }
    for (const auto &t : init) {
        c.initial_states.push_back(tableau(t));
    }
    c.target_state = tableau(need(doc, "target"));
    if (doc["discarded"]) {
        c.discarded = index_list(doc["discarded"], "discarded");
    }
    YAML::Node ops = need(doc, "ops");
    if (!ops.IsSequence()) {
        fail(ops, "ops must be a list");
    }
    for (const auto &o : ops) {
        c.ops.push_back(parse_op(o));
    }
    return c;
}

}  // namespace purecliff
