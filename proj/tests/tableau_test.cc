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

#include <gtest/gtest.h>

#include <random>

#include "dense.h"
#include "purecliff/tableau.h"

using namespace purecliff;

namespace {

PauliOperator P(const char *s) {
    return PauliOperator::parse(s);
}

StabilizerTableau T(std::vector<std::string> rows) {
    return StabilizerTableau::from_strings(rows);
}

StabilizerTableau ghz3() {
    return T({"XXX", "ZZI", "IZZ"});
}

CliffordGate G(GateKind k, uint32_t a, uint32_t b = 0) {
    return CliffordGate{k, a, b};
}

StabilizerTableau random_state(size_t n, std::mt19937_64 &rng, size_t gates = 30) {
    StabilizerTableau s(n);
    for (size_t i = 0; i < gates; i++) {
        s.apply_gate(pctest::random_gate(n, rng));
    }
    return s;
}

}  // namespace

TEST(tableau, zero_state) {
    StabilizerTableau s(3);
    EXPECT_TRUE(s.is_valid());
    EXPECT_EQ(s.render(), "+ZII\n+IZI\n+IIZ\n");
}

TEST(tableau, hadamard_on_z) {
    auto s = apply_gate(StabilizerTableau(1), G(GateKind::H, 0));
    EXPECT_TRUE(states_equal(s, T({"X"})));
}

TEST(tableau, cnot_makes_bell) {
    auto s = apply_gate(T({"XI", "IZ"}), G(GateKind::CNOT, 0, 1));
    EXPECT_TRUE(states_equal(s, T({"XX", "ZZ"})));
}

TEST(tableau, involutive_gates) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; i++) {
        auto s = random_state(4, rng);
        for (GateKind k : {GateKind::H, GateKind::CNOT, GateKind::CZ, GateKind::X, GateKind::Y, GateKind::Z}) {
            auto g = G(k, 1, 3);
            EXPECT_EQ(canonicalize(apply_gate(apply_gate(s, g), g)), canonicalize(s));
        }
    }
}

TEST(tableau, gate_target_out_of_range) {
    StabilizerTableau s(2);
    EXPECT_THROW(s.apply_gate(G(GateKind::H, 2)), DimensionError);
    EXPECT_THROW(s.apply_gate(G(GateKind::CNOT, 0, 5)), DimensionError);
}

TEST(tableau, apply_pauli_examples) {
    auto s = apply_pauli(ghz3(), PauliOperator::single(3, 2, 'X'));
    bool found = false;
    for (const auto &row : s.stabilizers()) {
        if (row == P("-IZZ")) found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_TRUE(states_equal(apply_pauli(ghz3(), P("IZZ")), ghz3()));

    auto bell = apply_pauli(T({"XX", "ZZ"}), PauliOperator::single(2, 0, 'Z'));
    EXPECT_EQ(bell.stabilizer(0), P("-XX"));
    EXPECT_EQ(bell.stabilizer(1), P("ZZ"));
    EXPECT_THROW(bell.apply_pauli(P("XXX")), DimensionError);
}

TEST(tableau, measure_examples) {
    FixedCoins coins;
    auto [o1, s1] = measure(StabilizerTableau(1), P("Z"), coins);
    EXPECT_EQ(o1, +1);
    EXPECT_EQ(coins.used(), 0u);
    EXPECT_TRUE(states_equal(s1, StabilizerTableau(1)));

    for (bool coin : {false, true}) {
        FixedCoins c({coin});
        auto [o, s] = measure(T({"X"}), P("Z"), c);
        EXPECT_EQ(c.used(), 1u);
        EXPECT_EQ(o, coin ? -1 : +1);
        EXPECT_TRUE(states_equal(s, T({coin ? "-Z" : "+Z"})));
    }

    FixedCoins c3;
    auto [o3, s3] = measure(ghz3(), P("IZZ"), c3);
    EXPECT_EQ(o3, +1);
    EXPECT_EQ(s3, ghz3());

    EXPECT_THROW(measure(ghz3(), P("iZZZ"), c3), InvalidObservable);
}

TEST(tableau, canonicalize_examples) {
    EXPECT_EQ(canonicalize(T({"ZZ", "XX"})).render(), canonicalize(T({"XX", "ZZ"})).render());
    EXPECT_EQ(canonicalize(ghz3()).render(), canonicalize(T({"ZIZ", "ZZI", "XXX"})).render());
    EXPECT_TRUE(states_equal(ghz3(), T({"ZIZ", "ZZI", "XXX"})));
    EXPECT_FALSE(states_equal(ghz3(), T({"-ZIZ", "ZZI", "XXX"})));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; i++) {
        auto c = canonicalize(random_state(1 + rng() % 6, rng));
        EXPECT_EQ(canonicalize(c), c);
        EXPECT_TRUE(c.is_valid());
    }
}

TEST(tableau, canonical_form_is_a_group_invariant) {
    // Random row operations on the generators leave the canonical rows alone.
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; i++) {
        size_t n = 2 + rng() % 5;
        auto s = random_state(n, rng);
        auto rows = s.stabilizers();
        for (int k = 0; k < 20; k++) {
            size_t a = rng() % n, b = rng() % n;
            if (a != b) rows[a] = multiply(rows[a], rows[b]);
        }
        auto t = StabilizerTableau::from_stabilizers(rows);
        EXPECT_EQ(canonicalize(t).render(), canonicalize(s).render());
        EXPECT_EQ(canonical_generators(rows), canonicalize(s).stabilizers());
    }
}

TEST(tableau, states_equal_examples) {
    auto a = StabilizerTableau(2);
    a.apply_gate(G(GateKind::H, 0));
    a.apply_gate(G(GateKind::CNOT, 0, 1));
    auto b = StabilizerTableau(2);
    b.apply_gate(G(GateKind::H, 1));
    b.apply_gate(G(GateKind::CNOT, 1, 0));
    EXPECT_TRUE(states_equal(a, b));

    pctest::DenseState da(2), db(2);
    da.apply(G(GateKind::H, 0));
    da.apply(G(GateKind::CNOT, 0, 1));
    db.apply(G(GateKind::H, 1));
    db.apply(G(GateKind::CNOT, 1, 0));
    for (size_t k = 0; k < 4; k++) EXPECT_NEAR(std::abs(da.amp[k] - db.amp[k]), 0, 1e-12);

    EXPECT_TRUE(states_equal(ghz3(), apply_pauli(ghz3(), P("IZZ"))));
    EXPECT_FALSE(states_equal(ghz3(), apply_pauli(ghz3(), PauliOperator::single(3, 1, 'X'))));
    EXPECT_THROW(states_equal(ghz3(), StabilizerTableau(2)), DimensionError);
}

TEST(tableau, from_stabilizers_rejects_bad_input) {
    EXPECT_THROW(T({"XX", "ZI"}), std::invalid_argument);
    EXPECT_THROW(T({"XX", "XX"}), std::invalid_argument);
    EXPECT_THROW(T({"XX"}), DimensionError);
    EXPECT_THROW(StabilizerTableau::from_stabilizers({P("iX")}), InvalidObservable);
}

TEST(tableau, invariants_hold_along_random_circuits) {
    std::mt19937_64 rng(1);
    for (int c = 0; c < 300; c++) {
        size_t n = 1 + rng() % 8;
        StabilizerTableau s(n);
        EngineCoins coins(rng);
        for (int step = 0; step < 40; step++) {
            if (rng() % 4 == 0) {
                s.measure(pctest::random_hermitian(n, rng), coins);
            } else {
                s.apply_gate(pctest::random_gate(n, rng));
            }
            ASSERT_TRUE(s.is_valid()) << s.render();
        }
    }
}

TEST(tableau, pauli_twice_is_identity) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; i++) {
        size_t n = 1 + rng() % 7;
        auto s = random_state(n, rng);
        auto e = pctest::random_hermitian(n, rng, true);
        EXPECT_EQ(apply_pauli(apply_pauli(s, e), e), s);
    }
}

TEST(tableau, pauli_errors_give_overlap_zero_or_one) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; i++) {
        size_t n = 1 + rng() % 4;
        StabilizerTableau s(n);
        pctest::DenseState d(n);
        for (int k = 0; k < 20; k++) {
            auto g = pctest::random_gate(n, rng);
            s.apply_gate(g);
            d.apply(g);
        }
        auto e = pctest::random_hermitian(n, rng, true);
        auto v = d.pauli(e);
        std::complex<double> overlap = 0;
        for (size_t b = 0; b < v.size(); b++) overlap += std::conj(d.amp[b]) * v[b];
        double o = std::norm(overlap);
        EXPECT_TRUE(std::abs(o) < 1e-9 || std::abs(o - 1) < 1e-9) << o;
        EXPECT_EQ(states_equal(s, apply_pauli(s, e)), o > 0.5);
    }
}

TEST(tableau, deterministic_measurement_keeps_state) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; i++) {
        size_t n = 1 + rng() % 6;
        auto s = random_state(n, rng);
        // A random product of generators is in the group.
        PauliOperator g(n);
        for (const auto &row : s.stabilizers()) {
            if (rng() & 1) g = multiply(g, row);
        }
        if (g.is_identity()) continue;
        // g itself is in the group, -g is not.
        FixedCoins coins;
        auto [o, t] = measure(s, g, coins);
        EXPECT_EQ(coins.used(), 0u);
        EXPECT_EQ(o, 1);
        EXPECT_EQ(canonicalize(t), canonicalize(s));
        PauliOperator minus = g;
        minus.set_phase(g.phase() ^ 2);
        EXPECT_EQ(measure(s, minus, coins).first, -1);
    }
}

TEST(tableau, restriction_to_purified_qubits) {
    // GHZ3 (x) |+> on qubit 3: restricting to {0,1,2} recovers GHZ3.
    auto s = StabilizerTableau::tensor({ghz3(), T({"X"})});
    auto r = s.restrict_to({0, 1, 2});
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(states_equal(*r, ghz3()));
    // Bell pair across the cut does not factor.
    EXPECT_FALSE(T({"XX", "ZZ"}).restrict_to({0}).has_value());
}

TEST(tableau, wide_registers) {
    size_t n = 150;
    StabilizerTableau s(n);
    s.apply_gate(G(GateKind::H, 0));
    for (uint32_t q = 1; q < n; q++) s.apply_gate(G(GateKind::CNOT, q - 1, q));
    EXPECT_TRUE(s.is_valid());
    PauliOperator zz(n);
    zz.set(0, 'Z');
    zz.set(149, 'Z');
    FixedCoins coins;
    EXPECT_EQ(measure(s, zz, coins).first, 1);
    EXPECT_EQ(coins.used(), 0u);
}
