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

#ifndef TWOORTH_POLYNOMIAL_HPP
#define TWOORTH_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "twoorth/rational.hpp"

namespace twoorth {

/**
 * Degree of a polynomial. The zero polynomial has degree minus infinity,
 * which compares below every finite degree and never takes part in
 * integer arithmetic.
 */
class Degree {
   public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const { return !finite_; }
    /// Throws std::logic_error on minus infinity.
    std::size_t value() const;
    constexpr bool at_most(std::size_t n) const { return !finite_ || value_ <= n; }

    friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

   private:
    constexpr Degree() = default;

    bool finite_ = false;
    std::size_t value_ = 0;
};

std::string to_string(Degree d);

/**
 * Dense univariate polynomial with exact rational coefficients; index i of
 * the coefficient vector holds the coefficient of x^i.
 *
 * Invariant: the highest stored coefficient is nonzero. The zero polynomial
 * stores nothing.
 */
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(Rational constant);
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    /// c x^n
    static Polynomial monomial(std::size_t n, Rational c = Rational(1));
    static Polynomial x() { return monomial(1); }

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero beyond the stored range.
    Rational coeff(std::size_t i) const;
    /// Zero for the zero polynomial.
    Rational leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Number of stored coefficients (degree + 1, or 0).
    std::size_t size() const { return coeffs_.size(); }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator-(const Polynomial& p);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator/(Polynomial p, const Rational& s) { return p *= inverse(s); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// k-th derivative.
Polynomial derivative(const Polynomial& p, std::size_t order = 1);

/// Rational value p(at), by Horner's rule.
Rational evaluate(const Polynomial& p, const Rational& at);

/// Human-readable form, e.g. "1/2 + x - 3x^2".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace twoorth

#endif
