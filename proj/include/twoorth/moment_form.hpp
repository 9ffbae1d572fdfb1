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

#ifndef TWOORTH_MOMENT_FORM_HPP
#define TWOORTH_MOMENT_FORM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twoorth/polynomial.hpp"
#include "twoorth/rational.hpp"

namespace twoorth {

/**
 * Linear functional on polynomials, known through the prefix
 * (u)_0, ..., (u)_N of its moment sequence (u)_n = <u, x^n>.
 *
 * N is the order: the largest moment index that is still exact after the
 * chain of operations that produced the form. Every operation below
 * computes the order of its result; nothing past it is ever stored.
 */
class MomentForm {
   public:
    /// Throws std::invalid_argument on an empty moment list.
    explicit MomentForm(std::vector<Rational> moments);

    static MomentForm zero(std::size_t order);

    std::size_t order() const { return moments_.size() - 1; }
    /// Throws OrderExceeded past order().
    const Rational& moment(std::size_t n) const;
    std::span<const Rational> moments() const { return moments_; }

    /// Drops the moments above `order`; throws OrderExceeded if asked to grow.
    MomentForm truncated(std::size_t order) const;

    friend bool operator==(const MomentForm&, const MomentForm&) = default;

   private:
    std::vector<Rational> moments_;
};

/// <u, p> = sum_i p_i (u)_i. Throws OrderExceeded when deg p > order.
Rational act(const MomentForm& u, const Polynomial& p);

/// (f u)_n = sum_i f_i (u)_{n+i}; the result loses deg f orders.
MomentForm left_mul(const Polynomial& f, const MomentForm& u);

/// (Du)_n = -n (u)_{n-1}; order is kept.
MomentForm derive_form(const MomentForm& u);

/// Exact agreement of moments 0..through. Throws OrderExceeded if either
/// form is shorter than `through`.
bool equal_up_to(const MomentForm& u, const MomentForm& v, std::size_t through);

/// First index <= through where the forms differ, if any.
std::optional<std::size_t> first_mismatch(const MomentForm& u, const MomentForm& v, std::size_t through);

// Linear combinations keep the smaller of the two orders.
MomentForm operator+(const MomentForm& u, const MomentForm& v);
MomentForm operator-(const MomentForm& u, const MomentForm& v);
MomentForm operator-(const MomentForm& u);
MomentForm operator*(const Rational& c, const MomentForm& u);

inline MomentForm operator*(const Polynomial& f, const MomentForm& u) { return left_mul(f, u); }
inline MomentForm D(const MomentForm& u) { return derive_form(u); }

}  // namespace twoorth

#endif
