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

#include <cmath>

#include <gtest/gtest.h>

#include "purecliff/perturbative.h"

using namespace purecliff;

namespace {

const NoiseModel kEps{1e-3, 0, 0, false};
const NoiseModel kAll{1e-3, 1e-3, 1e-3, false};

LinearPolynomial poly(int64_t c, Rational eps, Rational pg = 0, Rational pm = 0) {
    LinearPolynomial p;
    p.constant = c;
    p.coeff = {eps, pg, pm};
    return p;
}

// Bell purified pair plus a lone |0> sacrifice measured in X: the parity
// is a fair coin.
Circuit coin_circuit() {
    Circuit c;
    c.registers = {{"g", 2, 0, Role::Purified, {0, 1}}, {"s", 1, 0, Role::Sacrificial, {0}}};
    c.initial_states = {StabilizerTableau(2), StabilizerTableau(1)};
    c.target_state = StabilizerTableau::from_strings({"XX", "ZZ"});
    c.ops = {GateOp{GateKind::H, {0}, GateTag::Prep, std::nullopt},
             GateOp{GateKind::CNOT, {0, 1}, GateTag::Prep, std::nullopt}, TransmitOp{{1}},
             MeasureOp{2, 'X', "m"}, ParityCheckOp{{"m"}, false}};
    return c;
}

}  // namespace

TEST(perturbative, acceptance_polynomials) {
    auto raw = expand(builtin("raw-ghz3"), kEps);
    EXPECT_EQ(raw.fidelity, poly(1, -6));
    EXPECT_EQ(raw.success, poly(1, 0));

    auto het = expand(builtin("ghz3-het"), kEps);
    EXPECT_EQ(het.success, poly(1, -10));
    EXPECT_EQ(het.fidelity, poly(1, -2));
    EXPECT_EQ(het.count(FaultTag::Detected), 10u);
    EXPECT_EQ(het.count(FaultTag::UndetectedHarmful), 2u);
    EXPECT_EQ(het.count(FaultTag::UndetectedHarmless), 0u);

    auto std2 = expand(builtin("ghz3-p1p2"), kEps);
    EXPECT_EQ(std2.success, poly(1, -16));
    EXPECT_EQ(std2.fidelity, poly(1, -2));
}

TEST(perturbative, rendering) {
    auto het = expand(builtin("ghz3-het"), kEps);
    EXPECT_EQ(het.text(), "success = 1 - 10*eps\nfidelity = 1 - 2*eps\n");
    EXPECT_EQ(het.csv_rows(), "ghz3-het,success,1,-10,0,0\nghz3-het,fidelity,1,-2,0,0\n");
    EXPECT_EQ(poly(1, Rational(-1, 5), 3).str(), "1 - 1/5*eps + 3*p_gate");
}

TEST(perturbative, branch_counts) {
    for (const auto &name : builtin_names()) {
        auto p = builtin(name);
        for (const NoiseModel &m : {kEps, kAll, NoiseModel{1e-3, 1e-3, 1e-3, true}}) {
            auto rep = expand(p, m);
            size_t alts = 0;
            for (const auto &s : enumerate_fault_sites(p.circuit, m)) alts += s.alternatives.size();
            EXPECT_EQ(rep.branch_count, 1 + alts) << name;
            EXPECT_EQ(rep.classified.size(), alts);
        }
        EXPECT_LT(expand(p, kEps).branch_count, 200u) << name;
    }
}

TEST(perturbative, first_order_agrees_with_exact_enumeration) {
    for (const auto &name : builtin_names()) {
        auto p = builtin(name);
        ExactEnumeration ex(p.circuit, 12);
        auto rep = expand(p, kEps);
        const double h = 1e-7;
        EXPECT_NEAR((ex.success(h) - 1) / h, rep.success[Param::Eps].to_double(), 1e-3) << name;
        EXPECT_NEAR((ex.fidelity(h) - 1) / h, rep.fidelity[Param::Eps].to_double(), 1e-3) << name;
        // Remainder is second order: bounded by the 3K alternatives taken in
        // pairs, and it shrinks by ~100 from eps 1e-2 to 1e-3.
        double k3 = 3.0 * static_cast<double>(ex.site_count());
        double r2 = ex.success(1e-2) - rep.success.eval(1e-2, 0, 0);
        double r3 = ex.success(1e-3) - rep.success.eval(1e-3, 0, 0);
        EXPECT_LE(std::abs(r2), k3 * k3 * 1e-4) << name;
        EXPECT_LE(std::abs(r3), k3 * k3 * 1e-6) << name;
        if (std::abs(r2) > 1e-9) {
            EXPECT_NEAR(r2 / r3, 100, 15) << name;
        }
    }
}

TEST(perturbative, gate_and_measurement_terms) {
    auto rep = expand(builtin("ghz3-het"), kAll);
    // Every measurement flip of a parity-checked bit is caught.
    size_t meas = 0;
    for (const auto &c : rep.classified) {
        if (rep.sites[c.site].kind == SiteKind::Measurement) {
            meas++;
            EXPECT_EQ(c.tag, FaultTag::Detected);
        }
    }
    EXPECT_EQ(meas, 4u);
    EXPECT_EQ(rep.success[Param::PMeas], Rational(-4));
    EXPECT_EQ(rep.fidelity[Param::PMeas], Rational(0));
    EXPECT_EQ(rep.success[Param::Eps], Rational(-10));
}

TEST(perturbative, het_beats_two_stage_under_gate_noise) {
    auto het = expand(builtin("ghz3-het"), kAll);
    auto std2 = expand(builtin("ghz3-p1p2"), kAll);
    EXPECT_EQ(het.fidelity[Param::Eps], std2.fidelity[Param::Eps]);
    EXPECT_TRUE(het.fidelity[Param::PGate].to_double() > std2.fidelity[Param::PGate].to_double());
}

TEST(perturbative, random_parity_is_refused) {
    Circuit c = coin_circuit();
    EXPECT_TRUE(validate_structure(c).empty());
    EXPECT_FALSE(validate(c).empty());
    EXPECT_THROW(expand("coin", c, kEps), AmbiguityError);
}

TEST(perturbative, threads_do_not_change_the_report) {
    auto a = expand(builtin("cluster4-het"), kAll, 1);
    auto b = expand(builtin("cluster4-het"), kAll, 4);
    EXPECT_EQ(a.success, b.success);
    EXPECT_EQ(a.fidelity, b.fidelity);
    ASSERT_EQ(a.classified.size(), b.classified.size());
    for (size_t i = 0; i < a.classified.size(); i++) EXPECT_EQ(a.classified[i].tag, b.classified[i].tag);
}

TEST(perturbative, cross_validation_raw_ghz3) {
    auto rows = cross_validate(builtin("raw-ghz3"), NoiseModel{}, {0.001, 0.01}, 1000000, 9);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto &r : rows) {
        EXPECT_FALSE(r.flagged) << r.eps;
        EXPECT_NEAR(r.poly_fidelity, 1 - 6 * r.eps, 1e-12);
    }
}

TEST(perturbative, cross_validation_flags_wrong_polynomials) {
    // With no second-order allowance and a large eps, raw-ghz3 deviates from
    // 1 - 6 eps by 10 eps^2, far beyond 3 sigma at 10^6 trials.
    auto rows = cross_validate(builtin("raw-ghz3"), NoiseModel{}, {0.05}, 1000000, 9, 0.0);
    EXPECT_TRUE(rows[0].flagged);
}

TEST(perturbative, exact_enumeration_limits) {
    EXPECT_THROW(ExactEnumeration(builtin("ghz4-p1p2").circuit, 6), std::invalid_argument);
    ExactEnumeration ex(builtin("raw-ghz3").circuit);
    EXPECT_EQ(ex.site_count(), 2u);
    EXPECT_DOUBLE_EQ(ex.success(0.2), 1.0);
}
