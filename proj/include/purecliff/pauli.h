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

#ifndef PURECLIFF_PAULI_H
#define PURECLIFF_PAULI_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace purecliff {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidObservable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline size_t words_for(size_t n) {
    return (n + 63) / 64;
}

/// A signed Pauli string i^phase * P_0 (x) P_1 (x) ... where each P_q is chosen
/// by the bit pair (x_q, z_q): (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n);

    /// Parses "+XZI", "-YY", "iZ", "-iX" or a bare "XZ" (sign +).
    static PauliOperator parse(std::string_view text);
    /// Single-qubit Pauli 'X', 'Y' or 'Z' on qubit q of an n-qubit register.
    static PauliOperator single(size_t n, size_t q, char p);

    size_t n_qubits() const {
        return n_;
    }
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t log_i) {
        phase_ = log_i & 3;
    }
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    /// Sign bit for hermitian operators: true means -1.
    bool negative() const {
        return phase_ == 2;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    char at(size_t q) const;
    void set(size_t q, char p);
    bool is_identity() const;
    size_t weight() const;

    const std::vector<uint64_t> &x_words() const {
        return xs_;
    }
    const std::vector<uint64_t> &z_words() const {
        return zs_;
    }
    std::vector<uint64_t> &x_words() {
        return xs_;
    }
    std::vector<uint64_t> &z_words() {
        return zs_;
    }

    /// "+XZI" style rendering; imaginary phases render as "+i" / "-i".
    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;
    /// Orders by (x words, z words, phase); used for deterministic tie-breaks.
    bool operator<(const PauliOperator &other) const;

   private:
    size_t n_ = 0;
    uint8_t phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

bool commutes(const PauliOperator &a, const PauliOperator &b);
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// Phase exponent (mod 4) produced when the Pauli strings (x1,z1) and (x2,z2)
/// are multiplied in that order, ignoring their own phases. Overwrites x1,z1
/// with the product bits.
uint8_t mul_words_log_i(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t words);

}  // namespace purecliff

#endif
