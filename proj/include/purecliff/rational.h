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

#ifndef PURECLIFF_RATIONAL_H
#define PURECLIFF_RATIONAL_H

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace purecliff {

/// Exact fraction with 64-bit parts, always reduced with a positive denominator.
class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(int64_t n) : num_(n) {  // NOLINT: implicit from integers
    }
    Rational(int64_t n, int64_t d) : num_(n), den_(d) {
        if (d == 0) {
            throw std::domain_error("zero denominator");
        }
        normalize();
    }

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(Rational a, Rational b) {
        int64_t g = std::gcd(a.den_, b.den_);
        return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
    }
    friend Rational operator-(Rational a, Rational b) {
        return a + Rational(-b.num_, b.den_);
    }
    friend Rational operator*(Rational a, Rational b) {
        int64_t g1 = std::gcd(a.num_, b.den_);
        int64_t g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    Rational operator-() const {
        return Rational(-num_, den_);
    }
    Rational &operator+=(Rational b) {
        return *this = *this + b;
    }
    Rational &operator-=(Rational b) {
        return *this = *this - b;
    }
    bool operator==(const Rational &) const = default;

   private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

enum class Param : uint8_t { Eps = 0, PGate = 1, PMeas = 2 };
inline constexpr std::array<const char *, 3> kParamNames = {"eps", "p_gate", "p_meas"};

/// constant + sum_k coeff[k] * param_k with exact coefficients.
struct LinearPolynomial {
    Rational constant;
    std::array<Rational, 3> coeff{};

    Rational &operator[](Param p) {
        return coeff[static_cast<size_t>(p)];
    }
    const Rational &operator[](Param p) const {
        return coeff[static_cast<size_t>(p)];
    }
    double eval(double eps, double p_gate, double p_meas) const {
        return constant.to_double() + coeff[0].to_double() * eps + coeff[1].to_double() * p_gate +
               coeff[2].to_double() * p_meas;
    }
    /// "1 - 10*eps + 1/5*p_gate"; zero coefficients are omitted.
    std::string str() const;
    bool operator==(const LinearPolynomial &) const = default;
};

}  // namespace purecliff

#endif
