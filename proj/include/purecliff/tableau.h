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

#ifndef PURECLIFF_TABLEAU_H
#define PURECLIFF_TABLEAU_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "purecliff/pauli.h"

namespace purecliff {

enum class GateKind : uint8_t { H, S, CNOT, CZ, X, Y, Z };

std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_from_name(std::string_view name);
size_t gate_arity(GateKind k);

struct CliffordGate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;

    static CliffordGate make(GateKind kind, std::vector<uint32_t> const &qubits);
    bool operator==(const CliffordGate &) const = default;
};

/// Source of fair coins for random measurement outcomes.
class CoinSource {
   public:
    virtual ~CoinSource() = default;
    virtual bool flip() = 0;
};

/// Draws coins from a 64-bit engine.
class EngineCoins : public CoinSource {
   public:
    explicit EngineCoins(std::mt19937_64 &rng) : rng_(rng) {
    }
    bool flip() override {
        return (rng_() >> 63) != 0;
    }

   private:
    std::mt19937_64 &rng_;
};

/// Replays a fixed coin list, then false forever. Counts consumed coins.
class FixedCoins : public CoinSource {
   public:
    FixedCoins() = default;
    explicit FixedCoins(std::vector<bool> coins) : coins_(std::move(coins)) {
    }
    bool flip() override {
        bool c = used_ < coins_.size() ? coins_[used_] : false;
        used_++;
        return c;
    }
    size_t used() const {
        return used_;
    }

   private:
    std::vector<bool> coins_;
    size_t used_ = 0;
};

struct MeasureResult {
    bool negative;  // outcome -1
    bool random;
};

/// Stabilizer state on n qubits with destabilizer rows (CHP layout). Rows are
/// bit-packed; row i < n is destabilizer i, row n + i is stabilizer i.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    /// |0...0>.
    explicit StabilizerTableau(size_t n);
    /// Builds a state from n independent commuting hermitian generators.
    static StabilizerTableau from_stabilizers(const std::vector<PauliOperator> &stabilizers);
    static StabilizerTableau from_strings(const std::vector<std::string> &rows);

    size_t n_qubits() const {
        return n_;
    }
    PauliOperator stabilizer(size_t i) const {
        return row(n_ + i);
    }
    PauliOperator destabilizer(size_t i) const {
        return row(i);
    }
    std::vector<PauliOperator> stabilizers() const;

    void apply_gate(const CliffordGate &g);
    void apply_pauli(const PauliOperator &e);
    /// Pauli error given on a subset of qubits: local[k] acts on qubits[k].
    void apply_pauli_on(const PauliOperator &local, const std::vector<uint32_t> &qubits);
    MeasureResult measure(const PauliOperator &observable, CoinSource &coins);
    /// Single-qubit measurement in basis 'X', 'Y' or 'Z'.
    MeasureResult measure_qubit(uint32_t q, char basis, CoinSource &coins);

    /// Deterministic reduced echelon form of the stabilizer rows.
    void canonicalize();
    /// Stabilizer group restricted to qubits in `keep` (ascending), if the
    /// state factors so that the kept qubits are pure on their own.
    std::optional<StabilizerTableau> restrict_to(const std::vector<uint32_t> &keep) const;
    /// Canonical generators of the restricted group, without destabilizers.
    std::optional<std::vector<PauliOperator>> restricted_generators(const std::vector<uint32_t> &keep) const;
    /// True iff every tableau invariant holds.
    bool is_valid() const;
    std::string render() const;

    bool operator==(const StabilizerTableau &other) const = default;

    static StabilizerTableau tensor(const std::vector<StabilizerTableau> &parts);

   private:
    PauliOperator row(size_t r) const;
    void set_row(size_t r, const PauliOperator &p);
    uint64_t *xr(size_t r) {
        return &xs_[r * w_];
    }
    uint64_t *zr(size_t r) {
        return &zs_[r * w_];
    }
    const uint64_t *xr(size_t r) const {
        return &xs_[r * w_];
    }
    const uint64_t *zr(size_t r) const {
        return &zs_[r * w_];
    }
    bool bx(size_t r, size_t q) const {
        return (xs_[r * w_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool bz(size_t r, size_t q) const {
        return (zs_[r * w_ + (q >> 6)] >> (q & 63)) & 1;
    }
    /// row h <- row h * row i, tracking the sign of the real part.
    void rowmul(size_t h, size_t i);
    void swap_rows(size_t a, size_t b);
    bool row_anticommutes(size_t r, const PauliOperator &p) const;

    size_t n_ = 0;
    size_t w_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;  // 1 means -1

    friend bool states_equal(const StabilizerTableau &, const StabilizerTableau &);
};

StabilizerTableau apply_gate(StabilizerTableau s, const CliffordGate &g);
StabilizerTableau apply_pauli(StabilizerTableau s, const PauliOperator &e);
std::pair<int, StabilizerTableau> measure(StabilizerTableau s, const PauliOperator &observable, CoinSource &coins);
StabilizerTableau canonicalize(StabilizerTableau s);
bool states_equal(const StabilizerTableau &a, const StabilizerTableau &b);

/// Canonical reduced echelon form of a generator list (X block first, then Z).
std::vector<PauliOperator> canonical_generators(std::vector<PauliOperator> rows);

}  // namespace purecliff

#endif
