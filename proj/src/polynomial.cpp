// Copyright 2026 The twoorth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoorth/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace twoorth {

std::size_t Degree::value() const {
    if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
    return value_;
}

std::string to_string(Degree d) { return d.is_minus_infinity() ? "-inf" : std::to_string(d.value()); }

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(std::size_t n, Rational c) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(n + 1);
    v[n] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial operator-(const Polynomial& p) {
    Polynomial r = p;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, std::size_t order) {
    const auto c = p.coefficients();
    if (order == 0) return p;
    if (c.size() <= order) return {};
    std::vector<Rational> out(c.size() - order);
    for (std::size_t i = order; i < c.size(); ++i) {
        // i (i-1) ... (i-order+1)
        Rational falling(1);
        for (std::size_t j = 0; j < order; ++j) falling *= Rational(static_cast<long>(i - j));
        out[i - order] = c[i] * falling;
    }
    return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& at) {
    Rational acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        std::string term;
        Rational mag = c[i].sign() < 0 ? -c[i] : c[i];
        if (out.empty()) {
            if (c[i].sign() < 0) out += "-";
        } else {
            out += c[i].sign() < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != Rational(1)) term = mag.to_string();
        if (i >= 1) term += "x";
        if (i >= 2) term += "^" + std::to_string(i);
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace twoorth
