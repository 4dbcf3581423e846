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

#include "purecliff/pauli.h"

#include <bit>

namespace purecliff {

PauliOperator::PauliOperator(size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {
}

PauliOperator PauliOperator::parse(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            phase = 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }
    PauliOperator p(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        char c = text[k];
        if (c == '_') {
            c = 'I';
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
        p.set(q, c);
    }
    p.phase_ = phase & 3;
    return p;
}

PauliOperator PauliOperator::single(size_t n, size_t q, char p) {
    if (q >= n) {
        throw DimensionError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
    PauliOperator r(n);
    r.set(q, p);
    return r;
}

char PauliOperator::at(size_t q) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[x(q) | (z(q) << 1)];
}

void PauliOperator::set(size_t q, char p) {
    uint64_t m = uint64_t{1} << (q & 63);
    bool bx = p == 'X' || p == 'Y';
    bool bz = p == 'Z' || p == 'Y';
    xs_[q >> 6] = bx ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
    zs_[q >> 6] = bz ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

bool PauliOperator::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliOperator::weight() const {
    size_t t = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        t += std::popcount(xs_[w] | zs_[w]);
    }
    return t;
}

std::string PauliOperator::str() const {
    std::string s;
    s += (phase_ & 2) ? '-' : '+';
    if (phase_ & 1) {
        s += 'i';
    }
    for (size_t q = 0; q < n_; q++) {
        s += at(q);
    }
    return s;
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (xs_ != other.xs_) {
        return xs_ < other.xs_;
    }
    if (zs_ != other.zs_) {
        return zs_ < other.zs_;
    }
    return phase_ < other.phase_;
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("commutes: length mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < a.x_words().size(); w++) {
        acc ^= (a.x_words()[w] & b.z_words()[w]) ^ (a.z_words()[w] & b.x_words()[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

uint8_t mul_words_log_i(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t words) {
    // Two-bit counter per column, summed over words.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t w = 0; w < words; w++) {
        uint64_t x1z2 = x1[w] & z2[w];
        uint64_t anti = (x2[w] & z1[w]) ^ x1z2;
        x1[w] ^= x2[w];
        z1[w] ^= z2[w];
        cnt2 ^= (cnt1 ^ x1[w] ^ z1[w] ^ x1z2) & anti;
        cnt1 ^= anti;
    }
    return static_cast<uint8_t>((std::popcount(cnt1) + 2 * std::popcount(cnt2)) & 3);
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("multiply: length mismatch");
    }
    PauliOperator r = a;
    uint8_t s = mul_words_log_i(r.x_words().data(), r.z_words().data(), b.x_words().data(), b.z_words().data(),
                                r.x_words().size());
    r.set_phase(static_cast<uint8_t>(a.phase() + b.phase() + s));
    return r;
}

}  // namespace purecliff
