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

#include "purecliff/perturbative.h"

#include <cmath>
#include <limits>

namespace purecliff {

const char *fault_tag_name(FaultTag t) {
    switch (t) {
        case FaultTag::Detected:
            return "detected";
        case FaultTag::UndetectedHarmless:
            return "undetected_harmless";
        default:
            return "undetected_harmful";
    }
}

size_t ExpansionReport::count(FaultTag t) const {
    size_t n = 0;
    for (const auto &c : classified) {
        n += c.tag == t;
    }
    return n;
}

std::string ExpansionReport::text() const {
    return "success = " + success.str() + "\nfidelity = " + fidelity.str() + "\n";
}

std::string ExpansionReport::csv_header() {
    return "protocol,parameter,constant,coeff_eps,coeff_p_gate,coeff_p_meas";
}

std::string ExpansionReport::csv_rows() const {
    std::string out;
    for (const auto *name : {"success", "fidelity"}) {
        const LinearPolynomial &p = std::string(name) == "success" ? success : fidelity;
        out += protocol + "," + name + "," + p.constant.str() + "," + p.coeff[0].str() + "," + p.coeff[1].str() + "," +
               p.coeff[2].str() + "\n";
    }
    return out;
}

namespace {

TrajectoryResult branch(const Executor &ex, const FaultAssignment &faults, const std::string &what) {
    auto r = run_coin_independent(ex, faults);
    if (!r) {
        throw AmbiguityError("outcome of " + what + " depends on random measurement results");
    }
    return *r;
}

}  // namespace

ExpansionReport expand(const std::string &name, const Circuit &circuit, const NoiseModel &model, int threads) {
    auto diag = validate_structure(circuit);
    if (!diag.empty()) {
        throw ContractError("circuit does not validate: " + diag.front());
    }
    Executor ex(circuit);
    ExpansionReport rep;
    rep.protocol = name;
    rep.sites = enumerate_fault_sites(circuit, model);
    TrajectoryResult base = branch(ex, {}, "the no-fault branch");
    if (!base.passed) {
        throw ContractError("the no-fault branch fails its parity checks");
    }
    for (size_t s = 0; s < rep.sites.size(); s++) {
        for (size_t a = 0; a < rep.sites[s].alternatives.size(); a++) {
            rep.classified.push_back({s, a, FaultTag::Detected});
        }
    }
    rep.branch_count = 1 + rep.classified.size();
    std::vector<TrajectoryResult> results(rep.classified.size());
    auto n = static_cast<int64_t>(rep.classified.size());
    std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (int64_t i = 0; i < n; i++) {
        const auto &c = rep.classified[i];
        try {
            results[i] = branch(ex, {rep.sites[c.site].event(c.alternative)},
                                "fault branch at op " + std::to_string(rep.sites[c.site].op_index));
        } catch (const AmbiguityError &e) {
#pragma omp critical
            if (error.empty()) {
                error = e.what();
            }
        }
    }
    if (!error.empty()) {
        throw AmbiguityError(error);
    }
    // With s0 = 1: S = 1 + sum w (s_a - 1) and
    // F = M / S = m0 + sum w ((m_a - m0) - m0 (s_a - 1)) to first order.
    int64_t m0 = base.purified_equals_target ? 1 : 0;
    rep.success.constant = 1;
    rep.fidelity.constant = m0;
    for (int64_t i = 0; i < n; i++) {
        auto &c = rep.classified[i];
        const FaultSite &site = rep.sites[c.site];
        Rational w = site.alternatives[c.alternative].coeff;
        int64_t sa = results[i].passed ? 1 : 0;
        int64_t ma = results[i].passed && results[i].purified_equals_target ? 1 : 0;
        rep.success[site.param] += w * Rational(sa - 1);
        rep.fidelity[site.param] += w * Rational((ma - m0) - m0 * (sa - 1));
        c.tag = !results[i].passed                  ? FaultTag::Detected
                : results[i].purified_equals_target ? FaultTag::UndetectedHarmless
                                                    : FaultTag::UndetectedHarmful;
    }
    return rep;
}

ExpansionReport expand(const ProtocolSpec &protocol, const NoiseModel &model, int threads) {
    return expand(protocol.name, protocol.circuit, model, threads);
}

double cross_validation_bound(double poly_value, uint64_t n, double s, double allowance) {
    double p = std::min(1.0, std::max(0.0, poly_value));
    double sigma = n > 0 ? std::sqrt(p * (1 - p) / static_cast<double>(n)) : 0.0;
    return 3 * sigma + allowance * s * s;
}

std::vector<CrossValidationRow> cross_validate(const ProtocolSpec &protocol, const NoiseModel &model,
                                               const std::vector<double> &eps_values, uint64_t trials,
                                               uint64_t seed, double allowance, int threads) {
    NoiseModel symbolic = model;
    symbolic.eps = 1e-3;
    ExpansionReport rep = expand(protocol, symbolic, threads);
    std::vector<CrossValidationRow> rows;
    for (double eps : eps_values) {
        NoiseModel m = model;
        m.eps = eps;
        MonteCarloReport mc = run_mc(protocol, m, trials, seed, threads);
        CrossValidationRow row;
        row.eps = eps;
        row.mc_success = mc.success;
        row.mc_fidelity = mc.fidelity.value_or(std::numeric_limits<double>::quiet_NaN());
        row.poly_success = rep.success.eval(eps, m.p_gate, m.p_meas);
        row.poly_fidelity = rep.fidelity.eval(eps, m.p_gate, m.p_meas);
        double s = eps + m.p_gate + m.p_meas;
        row.bound_success = cross_validation_bound(row.poly_success, mc.trials, s, allowance);
        row.bound_fidelity = cross_validation_bound(row.poly_fidelity, mc.passes, s, allowance);
        row.flagged = std::abs(row.mc_success - row.poly_success) > row.bound_success ||
                      !(std::abs(row.mc_fidelity - row.poly_fidelity) <= row.bound_fidelity);
        rows.push_back(row);
    }
    return rows;
}

ExactEnumeration::ExactEnumeration(const Circuit &circuit, size_t max_sites) {
    NoiseModel probe;
    probe.eps = 0.1;
    auto sites = enumerate_fault_sites(circuit, probe);
    sites_ = sites.size();
    if (sites_ > max_sites) {
        throw std::invalid_argument("too many network sites for exhaustive enumeration: " + std::to_string(sites_));
    }
    pass_.assign(sites_ + 1, 0);
    match_.assign(sites_ + 1, 0);
    Executor ex(circuit);
    uint64_t patterns = uint64_t{1} << (2 * sites_);
    FaultAssignment faults;
    for (uint64_t code = 0; code < patterns; code++) {
        faults.clear();
        size_t k = 0;
        for (size_t s = 0; s < sites_; s++) {
            uint64_t a = (code >> (2 * s)) & 3;
            if (a) {
                faults.push_back(sites[s].event(a - 1));
                k++;
            }
        }
        FixedCoins coins;
        TrajectoryResult r = ex.run(faults, coins);
        pass_[k] += r.passed;
        match_[k] += r.passed && r.purified_equals_target;
    }
}

double ExactEnumeration::weigh(const std::vector<double> &counts, double eps) const {
    double total = 0;
    for (size_t k = 0; k <= sites_; k++) {
        total += counts[k] * std::pow(eps, static_cast<double>(k)) *
                 std::pow(1 - 3 * eps, static_cast<double>(sites_ - k));
    }
    return total;
}

double ExactEnumeration::success(double eps) const {
    return weigh(pass_, eps);
}

double ExactEnumeration::joint(double eps) const {
    return weigh(match_, eps);
}

double ExactEnumeration::fidelity(double eps) const {
    double s = success(eps);
    return s > 0 ? joint(eps) / s : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace purecliff
