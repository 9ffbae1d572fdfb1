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

#include "twoorth/diff_operator.hpp"

#include <algorithm>
#include <utility>

#include "twoorth/errors.hpp"

namespace twoorth {

namespace {

const Polynomial& zero_polynomial() {
    static const Polynomial zero;
    return zero;
}

}  // namespace

DiffOperator::DiffOperator(std::vector<Polynomial> coefficients) : a_(std::move(coefficients)) {
    for (std::size_t nu = 0; nu < a_.size(); ++nu) {
        if (!a_[nu].degree().at_most(nu)) {
            throw InvalidOperator("deg a_" + std::to_string(nu) + " = " + to_string(a_[nu].degree()) +
                                  " exceeds " + std::to_string(nu));
        }
    }
}

const Polynomial& DiffOperator::a(std::size_t nu) const { return nu < a_.size() ? a_[nu] : zero_polynomial(); }

std::optional<std::size_t> DiffOperator::order() const {
    for (std::size_t nu = a_.size(); nu-- > 0;) {
        if (!a_[nu].is_zero()) return nu;
    }
    return std::nullopt;
}

Degree DiffOperator::max_coefficient_degree() const {
    Degree d = Degree::minus_infinity();
    for (const auto& p : a_) d = std::max(d, p.degree());
    return d;
}

Polynomial apply(const DiffOperator& op, const Polynomial& p) {
    Polynomial out;
    Polynomial dp = p;
    for (std::size_t nu = 0; nu < op.coefficients().size() && !dp.is_zero(); ++nu) {
        if (nu > 0) dp = derivative(dp);
        const auto& a = op.a(nu);
        if (!a.is_zero()) out += a * dp / factorial(nu);
    }
    return out;
}

DiffOperator shifted(const DiffOperator& op, std::size_t m) {
    DiffOperator out;
    const auto& a = op.coefficients();
    if (m < a.size()) out.a_.assign(a.begin() + static_cast<std::ptrdiff_t>(m), a.end());
    out.form_ = m == 0 ? op.form_ : DiffOperator::Form::shifted;
    return out;
}

MomentForm transpose_apply(const DiffOperator& op, const MomentForm& u) {
    const auto order = op.order();
    const Degree max_deg = op.max_coefficient_degree();
    if (!order) return MomentForm::zero(u.order());
    const std::size_t consumed = max_deg.value();
    if (u.order() < *order + consumed) throw OrderExceeded(*order + consumed, u.order());

    MomentForm out = MomentForm::zero(u.order() - consumed);
    for (std::size_t n = 0; n <= *order; ++n) {
        const auto& a = op.a(n);
        if (a.is_zero()) continue;
        MomentForm term = left_mul(a, u);
        for (std::size_t j = 0; j < n; ++j) term = derive_form(term);
        Rational c = inverse(factorial(n));
        if (n % 2 == 1) c = -c;
        out = out + c * term;
    }
    return out;
}

Rational lambda(const DiffOperator& op, std::size_t k, std::size_t n) {
    Rational sum;
    for (std::size_t nu = 0; nu <= n; ++nu) {
        const std::size_t upper = n + k - nu;
        sum += binomial(n + k, upper) * op.a(n - nu, upper);
    }
    return sum;
}

std::vector<Rational> lambda_seq(const DiffOperator& op, std::size_t k, std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(lambda(op, k, n));
    return out;
}

bool satisfies_lowering_shape(const DiffOperator& op, std::size_t k) {
    const auto& a = op.coefficients();
    for (std::size_t nu = 0; nu < a.size(); ++nu) {
        if (nu < k) {
            if (!a[nu].is_zero()) return false;
        } else if (!a[nu].degree().at_most(nu - k)) {
            return false;
        }
    }
    return true;
}

LoweringClass classify_order(const DiffOperator& op, std::size_t n_check) {
    if (!op.is_normal_form()) throw InvalidOperator("classify_order needs an operator in normal form");
    LoweringClass out;
    out.horizon = n_check;

    // The shape conditions hold for every k below any k that satisfies them,
    // and lambda_k^[k] = a_0^[k] vanishes unless k is the largest such k.
    std::size_t k = 0;
    const std::size_t limit = op.coefficients().size();
    while (k < limit && satisfies_lowering_shape(op, k + 1)) ++k;
    out.candidate_k = k;

    for (std::size_t n = 0; n <= n_check; ++n) {
        Rational l = lambda(op, k, n);
        const bool vanished = l.is_zero();
        out.lambdas.push_back(std::move(l));
        if (vanished) {
            out.failing_n = n;
            return out;
        }
    }
    out.k = k;
    return out;
}

std::vector<Polynomial> jimage_mps(const DiffOperator& op, const std::vector<Polynomial>& mps, std::size_t k) {
    if (!op.is_normal_form() || !satisfies_lowering_shape(op, k)) {
        throw InvalidOperator("operator is not a lowering operator of order " + std::to_string(k));
    }
    std::vector<Polynomial> out;
    for (std::size_t n = 0; n + k < mps.size(); ++n) {
        const Rational l = lambda(op, k, n);
        if (l.is_zero()) throw ZeroLambda(n + k);
        out.push_back(apply(op, mps[n + k]) / l);
    }
    return out;
}

}  // namespace twoorth
