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

#include "purecliff/noise.h"

#include <algorithm>
#include <stdexcept>

namespace purecliff {

std::string LinearPolynomial::str() const {
    std::string s = constant.str();
    for (size_t k = 0; k < coeff.size(); k++) {
        Rational c = coeff[k];
        if (c == Rational(0)) {
            continue;
        }
        bool neg = c.num() < 0;
        Rational a = neg ? -c : c;
        s += neg ? " - " : " + ";
        if (!(a == Rational(1))) {
            s += a.str() + "*";
        }
        s += kParamNames[k];
    }
    return s;
}

void NoiseModel::check() const {
    if (!(eps >= 0) || 3 * eps > 1 + 1e-15) {
        throw std::domain_error("eps must lie in [0, 1/3]");
    }
    if (!(p_gate >= 0 && p_gate <= 1)) {
        throw std::domain_error("p_gate must lie in [0, 1]");
    }
    if (!(p_meas >= 0 && p_meas <= 1)) {
        throw std::domain_error("p_meas must lie in [0, 1]");
    }
}

FaultEvent FaultSite::event(size_t alt) const {
    FaultEvent e;
    e.op_index = op_index;
    const FaultAlternative &a = alternatives.at(alt);
    if (kind == SiteKind::Measurement) {
        e.flip = true;
        e.error = PauliOperator(0);
    } else {
        e.qubits = qubits;
        e.error = a.error;
    }
    return e;
}

namespace {

FaultSite depolarizing_site(size_t op_index, SiteKind kind, std::vector<uint32_t> qubits, Param param,
                            bool per_pauli) {
    FaultSite s;
    s.op_index = op_index;
    s.kind = kind;
    s.param = param;
    static constexpr char kP[4] = {'I', 'X', 'Y', 'Z'};
    size_t k = qubits.size();
    size_t count = (size_t{1} << (2 * k)) - 1;
    Rational coeff = per_pauli ? Rational(1) : Rational(1, static_cast<int64_t>(count));
    for (size_t idx = 1; idx <= count; idx++) {
        FaultAlternative a;
        a.error = PauliOperator(k);
        for (size_t j = 0; j < k; j++) {
            a.error.set(j, kP[(idx >> (2 * (k - 1 - j))) & 3]);
        }
        a.coeff = coeff;
        s.alternatives.push_back(std::move(a));
    }
    s.qubits = std::move(qubits);
    return s;
}

}  // namespace

std::vector<FaultSite> enumerate_fault_sites(const Circuit &circuit, const NoiseModel &model) {
    model.check();
    std::vector<FaultSite> sites;
    for (size_t i = 0; i < circuit.ops.size(); i++) {
        const CircuitOp &op = circuit.ops[i];
        if (const auto *t = std::get_if<TransmitOp>(&op)) {
            if (model.eps > 0) {
                std::vector<uint32_t> qs = t->qubits;
                std::sort(qs.begin(), qs.end());
                for (uint32_t q : qs) {
                    sites.push_back(depolarizing_site(i, SiteKind::Network, {q}, Param::Eps, true));
                }
            }
        } else if (const auto *s = std::get_if<NoisySiteOp>(&op)) {
            bool eps = s->channel == "eps";
            if ((eps ? model.eps : model.p_gate) > 0) {
                sites.push_back(depolarizing_site(i, eps ? SiteKind::Network : SiteKind::Gate, s->qubits,
                                                  eps ? Param::Eps : Param::PGate, eps));
            }
        } else if (const auto *g = std::get_if<GateOp>(&op)) {
            bool eligible = !g->condition && (g->tag == GateTag::Operational ||
                                              (g->tag == GateTag::Prep && model.noisy_prep));
            if (eligible && model.p_gate > 0) {
                sites.push_back(depolarizing_site(i, SiteKind::Gate, g->qubits, Param::PGate, false));
            }
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            if (model.p_meas > 0) {
                FaultSite s;
                s.op_index = i;
                s.kind = SiteKind::Measurement;
                s.qubits = {m->qubit};
                s.label = m->label;
                s.param = Param::PMeas;
                FaultAlternative a;
                a.error = PauliOperator(0);
                a.flip = true;
                a.coeff = Rational(1);
                s.alternatives.push_back(a);
                sites.push_back(std::move(s));
            }
        }
    }
    return sites;
}

void sample_faults(const std::vector<FaultSite> &sites, const NoiseModel &model, std::mt19937_64 &rng,
                   FaultAssignment &out) {
    out.clear();
    for (const FaultSite &s : sites) {
        double u = uniform53(rng);
        double per = s.alternative_probability(model);
        double total = per * static_cast<double>(s.alternatives.size());
        if (u < total) {
            size_t alt = std::min(static_cast<size_t>(u / per), s.alternatives.size() - 1);
            out.push_back(s.event(alt));
        }
    }
}

FaultAssignment sample_faults(const std::vector<FaultSite> &sites, const NoiseModel &model, std::mt19937_64 &rng) {
    FaultAssignment out;
    sample_faults(sites, model, rng, out);
    return out;
}

}  // namespace purecliff
