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

#ifndef TWOORTH_DIFF_OPERATOR_HPP
#define TWOORTH_DIFF_OPERATOR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "twoorth/moment_form.hpp"
#include "twoorth/polynomial.hpp"
#include "twoorth/rational.hpp"

namespace twoorth {

/**
 * Degree-non-increasing linear operator on polynomials,
 *
 *     J = sum_nu a_nu(x) / nu! D^nu,
 *
 * stored as its coefficient list a_0, a_1, ... . In normal form every
 * a_nu has degree <= nu, which is exactly the class of operators that
 * never raise degrees. Shifted operators J^(m) (entry n holds a_{n+m})
 * break that bound and are tagged as such; they are only ever used through
 * their transposed action on forms.
 */
class DiffOperator {
   public:
    enum class Form { normal, shifted };

    DiffOperator() = default;
    /// Normal form; throws InvalidOperator if some deg a_nu > nu.
    explicit DiffOperator(std::vector<Polynomial> coefficients);

    static DiffOperator identity() { return DiffOperator({Polynomial(Rational(1))}); }
    static DiffOperator derivative() { return DiffOperator({Polynomial(), Polynomial(Rational(1))}); }

    Form form() const { return form_; }
    bool is_normal_form() const { return form_ == Form::normal; }

    /// a_nu, or zero past the stored list.
    const Polynomial& a(std::size_t nu) const;
    /// a_i^[nu]: coefficient of x^i in a_nu.
    Rational a(std::size_t i, std::size_t nu) const { return a(nu).coeff(i); }

    const std::vector<Polynomial>& coefficients() const { return a_; }
    /// Highest nu with a_nu != 0, if any.
    std::optional<std::size_t> order() const;
    /// max_nu deg a_nu; minus infinity for the zero operator.
    Degree max_coefficient_degree() const;

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

   private:
    friend DiffOperator shifted(const DiffOperator& op, std::size_t m);

    std::vector<Polynomial> a_;
    Form form_ = Form::normal;
};

/// J(p) = sum_nu a_nu p^(nu) / nu!
Polynomial apply(const DiffOperator& op, const Polynomial& p);

/// J^(m): coefficient list a_m, a_{m+1}, ... tagged as shifted.
DiffOperator shifted(const DiffOperator& op, std::size_t m);

/// Transposed action tJ(u) = sum_n (-1)^n / n! D^n(a_n u). The result
/// order is u.order() - max deg a_nu. Throws OrderExceeded unless
/// u.order() >= operator order + max coefficient degree.
MomentForm transpose_apply(const DiffOperator& op, const MomentForm& u);

/// lambda_{n+k}^[k] = sum_{nu=0}^{n} C(n+k, n+k-nu) a_{n-nu}^[n+k-nu].
/// lambda_{n+k}^[k], the coefficient of x^n in J(x^{n+k}).
Rational lambda(const DiffOperator& op, std::size_t k, std::size_t n);

/// lambda_{k}^[k], ..., lambda_{count-1+k}^[k].
std::vector<Rational> lambda_seq(const DiffOperator& op, std::size_t k, std::size_t count);

/**
 * Outcome of the lowering-order test. When `k` is set, the operator acts
 * like D^k: it kills degrees below k and lowers every higher degree by
 * exactly k, which has been checked for n = 0..horizon. When `k` is empty
 * the smallest k meeting the coefficient conditions produced a vanishing
 * lambda at `failing_n`.
 */
struct LoweringClass {
    std::optional<std::size_t> k;
    std::size_t candidate_k = 0;
    std::size_t horizon = 0;
    std::optional<std::size_t> failing_n;
    std::vector<Rational> lambdas;  // lambda_{n+k}^[k] for n = 0..horizon

    bool classifiable() const { return k.has_value(); }
};

/// Throws InvalidOperator for shifted operators.
LoweringClass classify_order(const DiffOperator& op, std::size_t n_check);

/// True when a_0 = ... = a_{k-1} = 0 and deg a_nu <= nu - k for nu >= k.
bool satisfies_lowering_shape(const DiffOperator& op, std::size_t k);

/// Normalized J-image P~_n = J(P_{n+k}) / lambda_{n+k}^[k] for every n with
/// n + k < P.size(). Throws ZeroLambda, InvalidOperator if the coefficient
/// shape does not match k.
std::vector<Polynomial> jimage_mps(const DiffOperator& op, const std::vector<Polynomial>& mps, std::size_t k);

}  // namespace twoorth

#endif
