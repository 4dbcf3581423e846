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

#include "purecliff/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace purecliff {

namespace {

constexpr std::string_view kGateNames[] = {"H", "S", "CNOT", "CZ", "X", "Y", "Z"};

// Gaussian elimination over the symplectic bits of `rows` (each a PauliOperator
// on the same register) with pivots taken in `order`, where entries < n select
// X columns and entries >= n select Z column (entry - n). Row products keep
// phases exact. Returns the number of pivots found; pivot rows come first.
size_t eliminate(std::vector<PauliOperator> &rows, const std::vector<size_t> &order, size_t n) {
    size_t next = 0;
    for (size_t col : order) {
        bool is_x = col < n;
        size_t q = is_x ? col : col - n;
        auto has = [&](const PauliOperator &p) { return is_x ? p.x(q) : p.z(q); };
        size_t k = next;
        while (k < rows.size() && !has(rows[k])) {
            k++;
        }
        if (k == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[k]);
        for (size_t j = 0; j < rows.size(); j++) {
            if (j != next && has(rows[j])) {
                rows[j] = multiply(rows[j], rows[next]);
            }
        }
        next++;
        if (next == rows.size()) {
            break;
        }
    }
    return next;
}

std::vector<size_t> default_order(size_t n) {
    std::vector<size_t> order(2 * n);
    for (size_t i = 0; i < 2 * n; i++) {
        order[i] = i;
    }
    return order;
}

}  // namespace

std::string_view gate_name(GateKind k) {
    return kGateNames[static_cast<size_t>(k)];
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (size_t i = 0; i < std::size(kGateNames); i++) {
        if (kGateNames[i] == name) {
            return static_cast<GateKind>(i);
        }
    }
    if (name == "CX") {
        return GateKind::CNOT;
    }
    return std::nullopt;
}

size_t gate_arity(GateKind k) {
    return (k == GateKind::CNOT || k == GateKind::CZ) ? 2 : 1;
}

CliffordGate CliffordGate::make(GateKind kind, std::vector<uint32_t> const &qubits) {
    if (qubits.size() != gate_arity(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " expects " + std::to_string(gate_arity(kind)) +
                                    " target(s)");
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " targets must be distinct");
    }
    return {kind, qubits[0], qubits.size() == 2 ? qubits[1] : 0};
}

StabilizerTableau::StabilizerTableau(size_t n)
    : n_(n), w_(words_for(n)), xs_(2 * n * w_, 0), zs_(2 * n * w_, 0), signs_(2 * n, 0) {
    for (size_t q = 0; q < n; q++) {
        xs_[q * w_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        zs_[(n + q) * w_ + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
}

StabilizerTableau StabilizerTableau::from_stabilizers(const std::vector<PauliOperator> &stabs) {
    size_t n = stabs.size();
    for (const auto &s : stabs) {
        if (s.n_qubits() != n) {
            throw DimensionError("from_stabilizers: need n generators on n qubits");
        }
        if (!s.is_hermitian()) {
            throw InvalidObservable("from_stabilizers: generator " + s.str() + " is not hermitian");
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!commutes(stabs[i], stabs[j])) {
                throw std::invalid_argument("from_stabilizers: " + stabs[i].str() + " and " + stabs[j].str() +
                                            " anticommute");
            }
        }
    }
    // Destabilizers: for each candidate single-qubit X_q / Z_q record which
    // generators it anticommutes with, then solve for combinations hitting e_i.
    size_t m = 2 * n;
    std::vector<std::vector<uint8_t>> a(m, std::vector<uint8_t>(n, 0));
    std::vector<std::vector<uint8_t>> tag(m, std::vector<uint8_t>(m, 0));
    for (size_t c = 0; c < m; c++) {
        PauliOperator cand = PauliOperator::single(n, c % n, c < n ? 'X' : 'Z');
        for (size_t j = 0; j < n; j++) {
            a[c][j] = !commutes(cand, stabs[j]);
        }
        tag[c][c] = 1;
    }
    size_t next = 0;
    std::vector<size_t> pivot_row(n, m);
    for (size_t col = 0; col < n; col++) {
        size_t k = next;
        while (k < m && !a[k][col]) {
            k++;
        }
        if (k == m) {
            throw std::invalid_argument("from_stabilizers: generators are not independent");
        }
        std::swap(a[next], a[k]);
        std::swap(tag[next], tag[k]);
        for (size_t r = 0; r < m; r++) {
            if (r != next && a[r][col]) {
                for (size_t j = 0; j < n; j++) {
                    a[r][j] ^= a[next][j];
                }
                for (size_t j = 0; j < m; j++) {
                    tag[r][j] ^= tag[next][j];
                }
            }
        }
        pivot_row[col] = next;
        next++;
    }
    StabilizerTableau t(n);
    for (size_t i = 0; i < n; i++) {
        PauliOperator d(n);
        const auto &tg = tag[pivot_row[i]];
        for (size_t c = 0; c < m; c++) {
            if (tg[c]) {
                size_t q = c % n;
                d.set(q, c < n ? (d.z(q) ? 'Y' : 'X') : (d.x(q) ? 'Y' : 'Z'));
            }
        }
        t.set_row(i, d);
        t.set_row(n + i, stabs[i]);
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_strings(const std::vector<std::string> &rows) {
    std::vector<PauliOperator> ps;
    for (const auto &r : rows) {
        ps.push_back(PauliOperator::parse(r));
    }
    return from_stabilizers(ps);
}

StabilizerTableau StabilizerTableau::tensor(const std::vector<StabilizerTableau> &parts) {
    size_t n = 0;
    for (const auto &p : parts) {
        n += p.n_;
    }
    StabilizerTableau t(n);
    std::fill(t.xs_.begin(), t.xs_.end(), 0);
    std::fill(t.zs_.begin(), t.zs_.end(), 0);
    size_t off = 0;
    for (const auto &p : parts) {
        for (size_t i = 0; i < p.n_; i++) {
            for (size_t half = 0; half < 2; half++) {
                size_t src = half * p.n_ + i;
                size_t dst = half * n + off + i;
                for (size_t q = 0; q < p.n_; q++) {
                    size_t g = off + q;
                    if (p.bx(src, q)) {
                        t.xs_[dst * t.w_ + (g >> 6)] |= uint64_t{1} << (g & 63);
                    }
                    if (p.bz(src, q)) {
                        t.zs_[dst * t.w_ + (g >> 6)] |= uint64_t{1} << (g & 63);
                    }
                }
                t.signs_[dst] = p.signs_[src];
            }
        }
        off += p.n_;
    }
    return t;
}

PauliOperator StabilizerTableau::row(size_t r) const {
    PauliOperator p(n_);
    std::copy(xr(r), xr(r) + w_, p.x_words().begin());
    std::copy(zr(r), zr(r) + w_, p.z_words().begin());
    p.set_phase(signs_[r] ? 2 : 0);
    return p;
}

void StabilizerTableau::set_row(size_t r, const PauliOperator &p) {
    std::copy(p.x_words().begin(), p.x_words().end(), xr(r));
    std::copy(p.z_words().begin(), p.z_words().end(), zr(r));
    signs_[r] = p.negative() ? 1 : 0;
}

std::vector<PauliOperator> StabilizerTableau::stabilizers() const {
    std::vector<PauliOperator> out;
    for (size_t i = 0; i < n_; i++) {
        out.push_back(stabilizer(i));
    }
    return out;
}

void StabilizerTableau::apply_gate(const CliffordGate &g) {
    size_t arity = gate_arity(g.kind);
    if (g.q0 >= n_ || (arity == 2 && g.q1 >= n_)) {
        throw DimensionError("gate target out of range");
    }
    if (arity == 2 && g.q0 == g.q1) {
        throw std::invalid_argument("two-qubit gate on a single qubit");
    }
    size_t wa = g.q0 >> 6;
    uint64_t ma = uint64_t{1} << (g.q0 & 63);
    size_t wb = g.q1 >> 6;
    uint64_t mb = uint64_t{1} << (g.q1 & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xa = xs_[r * w_ + wa];
        uint64_t &za = zs_[r * w_ + wa];
        bool xa_b = xa & ma;
        bool za_b = za & ma;
        switch (g.kind) {
            case GateKind::H:
                signs_[r] ^= xa_b & za_b;
                if (xa_b != za_b) {
                    xa ^= ma;
                    za ^= ma;
                }
                break;
            case GateKind::S:
                signs_[r] ^= xa_b & za_b;
                if (xa_b) {
                    za ^= ma;
                }
                break;
            case GateKind::X:
                signs_[r] ^= za_b;
                break;
            case GateKind::Y:
                signs_[r] ^= xa_b ^ za_b;
                break;
            case GateKind::Z:
                signs_[r] ^= xa_b;
                break;
            case GateKind::CNOT: {
                uint64_t &xb = xs_[r * w_ + wb];
                uint64_t &zb = zs_[r * w_ + wb];
                bool xb_b = xb & mb;
                bool zb_b = zb & mb;
                signs_[r] ^= xa_b & zb_b & !(xb_b ^ za_b);
                if (xa_b) {
                    xb ^= mb;
                }
                if (zb_b) {
                    za ^= ma;
                }
                break;
            }
            case GateKind::CZ: {
                uint64_t &xb = xs_[r * w_ + wb];
                uint64_t &zb = zs_[r * w_ + wb];
                bool xb_b = xb & mb;
                bool zb_b = zb & mb;
                signs_[r] ^= xa_b & xb_b & (za_b ^ zb_b);
                if (xb_b) {
                    za ^= ma;
                }
                if (xa_b) {
                    zb ^= mb;
                }
                break;
            }
        }
    }
}

bool StabilizerTableau::row_anticommutes(size_t r, const PauliOperator &p) const {
    uint64_t acc = 0;
    const uint64_t *x = xr(r);
    const uint64_t *z = zr(r);
    for (size_t w = 0; w < w_; w++) {
        acc ^= (x[w] & p.z_words()[w]) ^ (z[w] & p.x_words()[w]);
    }
    return std::popcount(acc) & 1;
}

void StabilizerTableau::apply_pauli(const PauliOperator &e) {
    if (e.n_qubits() != n_) {
        throw DimensionError("apply_pauli: length mismatch");
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= row_anticommutes(r, e);
    }
}

void StabilizerTableau::apply_pauli_on(const PauliOperator &local, const std::vector<uint32_t> &qubits) {
    if (local.n_qubits() != qubits.size()) {
        throw DimensionError("apply_pauli_on: length mismatch");
    }
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] >= n_) {
            throw DimensionError("apply_pauli_on: qubit out of range");
        }
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        bool flip = false;
        for (size_t k = 0; k < qubits.size(); k++) {
            flip ^= (bx(r, qubits[k]) & local.z(k)) ^ (bz(r, qubits[k]) & local.x(k));
        }
        signs_[r] ^= flip;
    }
}

void StabilizerTableau::rowmul(size_t h, size_t i) {
    uint8_t log_i = mul_words_log_i(xr(h), zr(h), xr(i), zr(i), w_);
    log_i = static_cast<uint8_t>(log_i + 2 * signs_[h] + 2 * signs_[i]);
    signs_[h] = (log_i >> 1) & 1;
}

void StabilizerTableau::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(xr(a), xr(a) + w_, xr(b));
    std::swap_ranges(zr(a), zr(a) + w_, zr(b));
    std::swap(signs_[a], signs_[b]);
}

MeasureResult StabilizerTableau::measure(const PauliOperator &obs, CoinSource &coins) {
    if (obs.n_qubits() != n_) {
        throw DimensionError("measure: length mismatch");
    }
    if (!obs.is_hermitian()) {
        throw InvalidObservable("measure: observable " + obs.str() + " is not hermitian");
    }
    if (obs.is_identity()) {
        return {obs.negative(), false};
    }
    size_t p = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (row_anticommutes(r, obs)) {
            p = r;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t r = 0; r < 2 * n_; r++) {
            if (r != p && row_anticommutes(r, obs)) {
                rowmul(r, p);
            }
        }
        std::copy(xr(p), xr(p) + w_, xr(p - n_));
        std::copy(zr(p), zr(p) + w_, zr(p - n_));
        signs_[p - n_] = signs_[p];
        bool coin = coins.flip();
        std::copy(obs.x_words().begin(), obs.x_words().end(), xr(p));
        std::copy(obs.z_words().begin(), obs.z_words().end(), zr(p));
        signs_[p] = coin ^ obs.negative();
        return {coin, true};
    }
    std::vector<uint64_t> sx(w_, 0);
    std::vector<uint64_t> sz(w_, 0);
    uint8_t log_i = 0;
    for (size_t i = 0; i < n_; i++) {
        if (row_anticommutes(i, obs)) {
            log_i = static_cast<uint8_t>(log_i + 2 * signs_[n_ + i] +
                                         mul_words_log_i(sx.data(), sz.data(), xr(n_ + i), zr(n_ + i), w_));
        }
    }
    bool product_negative = (log_i >> 1) & 1;
    return {static_cast<bool>(product_negative ^ obs.negative()), false};
}

MeasureResult StabilizerTableau::measure_qubit(uint32_t q, char basis, CoinSource &coins) {
    return measure(PauliOperator::single(n_, q, basis), coins);
}

void StabilizerTableau::canonicalize() {
    size_t next = 0;
    for (size_t col = 0; col < 2 * n_ && next < n_; col++) {
        bool is_x = col < n_;
        size_t q = is_x ? col : col - n_;
        auto has = [&](size_t r) { return is_x ? bx(r, q) : bz(r, q); };
        size_t k = next;
        while (k < n_ && !has(n_ + k)) {
            k++;
        }
        if (k == n_) {
            continue;
        }
        swap_rows(n_ + next, n_ + k);
        swap_rows(next, k);
        for (size_t j = 0; j < n_; j++) {
            if (j != next && has(n_ + j)) {
                rowmul(n_ + j, n_ + next);
                // keep destabilizer pairing: d_next <- d_next * d_j
                rowmul(next, j);
            }
        }
        next++;
    }
}

std::optional<std::vector<PauliOperator>> StabilizerTableau::restricted_generators(
    const std::vector<uint32_t> &keep) const {
    std::vector<bool> kept(n_, false);
    for (uint32_t q : keep) {
        if (q >= n_) {
            throw DimensionError("restrict_to: qubit out of range");
        }
        kept[q] = true;
    }
    std::vector<size_t> order;
    for (size_t q = 0; q < n_; q++) {
        if (!kept[q]) {
            order.push_back(q);
        }
    }
    for (size_t q = 0; q < n_; q++) {
        if (!kept[q]) {
            order.push_back(n_ + q);
        }
    }
    std::vector<PauliOperator> rows = stabilizers();
    size_t pivots = eliminate(rows, order, n_);
    if (n_ - pivots != keep.size()) {
        return std::nullopt;
    }
    std::vector<PauliOperator> sub;
    for (size_t r = pivots; r < n_; r++) {
        PauliOperator p(keep.size());
        for (size_t k = 0; k < keep.size(); k++) {
            p.set(k, rows[r].at(keep[k]));
        }
        p.set_phase(rows[r].phase());
        sub.push_back(p);
    }
    return canonical_generators(std::move(sub));
}

std::optional<StabilizerTableau> StabilizerTableau::restrict_to(const std::vector<uint32_t> &keep) const {
    auto sub = restricted_generators(keep);
    if (!sub) {
        return std::nullopt;
    }
    if (sub->empty()) {
        return StabilizerTableau(0);
    }
    return from_stabilizers(*sub);
}

bool StabilizerTableau::is_valid() const {
    std::vector<PauliOperator> s = stabilizers();
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            if (!commutes(s[i], s[j])) {
                return false;
            }
        }
        PauliOperator d = destabilizer(i);
        for (size_t j = 0; j < n_; j++) {
            if (commutes(d, s[j]) == (i == j)) {
                return false;
            }
        }
    }
    std::vector<PauliOperator> rows = s;
    if (eliminate(rows, default_order(n_), n_) != n_) {
        return false;
    }
    return true;
}

std::string StabilizerTableau::render() const {
    std::string out;
    for (size_t i = 0; i < n_; i++) {
        out += stabilizer(i).str();
        out += '\n';
    }
    return out;
}

std::vector<PauliOperator> canonical_generators(std::vector<PauliOperator> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].n_qubits();
    size_t pivots = eliminate(rows, default_order(n), n);
    rows.resize(pivots);
    return rows;
}

StabilizerTableau apply_gate(StabilizerTableau s, const CliffordGate &g) {
    s.apply_gate(g);
    return s;
}

StabilizerTableau apply_pauli(StabilizerTableau s, const PauliOperator &e) {
    s.apply_pauli(e);
    return s;
}

std::pair<int, StabilizerTableau> measure(StabilizerTableau s, const PauliOperator &observable, CoinSource &coins) {
    MeasureResult r = s.measure(observable, coins);
    return {r.negative ? -1 : +1, std::move(s)};
}

StabilizerTableau canonicalize(StabilizerTableau s) {
    s.canonicalize();
    return s;
}

bool states_equal(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.n_ != b.n_) {
        throw DimensionError("states_equal: dimension mismatch");
    }
    StabilizerTableau ca = canonicalize(a);
    StabilizerTableau cb = canonicalize(b);
    size_t n = a.n_;
    for (size_t r = n; r < 2 * n; r++) {
        if (ca.signs_[r] != cb.signs_[r] || !std::equal(ca.xr(r), ca.xr(r) + ca.w_, cb.xr(r)) ||
            !std::equal(ca.zr(r), ca.zr(r) + ca.w_, cb.zr(r))) {
            return false;
        }
    }
    return true;
}

}  // namespace purecliff
