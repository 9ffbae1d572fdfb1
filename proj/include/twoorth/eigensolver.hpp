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

#ifndef TWOORTH_EIGENSOLVER_HPP
#define TWOORTH_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

#include "twoorth/diff_operator.hpp"
#include "twoorth/two_orth.hpp"

namespace twoorth {

/// M[tau][n] = coefficient of x^tau in J(x^n), 0 <= tau <= n <= n_max.
class OperatorMatrix {
   public:
    explicit OperatorMatrix(std::size_t n_max) : n_max_(n_max), m_((n_max + 1) * (n_max + 1)) {}

    std::size_t n_max() const { return n_max_; }
    Rational& at(std::size_t tau, std::size_t n) { return m_[tau * (n_max_ + 1) + n]; }
    const Rational& at(std::size_t tau, std::size_t n) const { return m_[tau * (n_max_ + 1) + n]; }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

   private:
    std::size_t n_max_;
    std::vector<Rational> m_;
};

/// M[tau][n] = sum_{nu=0}^{tau} C(n, n-nu) a_{tau-nu}^[n-nu]. Throws
/// InvalidOperator for shifted operators.
OperatorMatrix operator_matrix(const DiffOperator& J, std::size_t n_max);

/// Same matrix read off apply(J, x^n).
OperatorMatrix operator_matrix_by_apply(const DiffOperator& J, std::size_t n_max);

struct EigenSolution {
    MPSPrefix P;
    std::vector<Rational> lambdas;
};

/// Monic eigenpolynomials of J up to degree n_max. Throws NonInvertible
/// when some lambda_n = 0, RepeatedEigenvalue(n, m) when lambda_n = lambda_m.
EigenSolution eigen_mps(const DiffOperator& J, std::size_t n_max);

/// apply(J, P_n) == lambda_n P_n for every n covered by both lists.
bool verify_eigen(const DiffOperator& J, const MPSPrefix& P, const std::vector<Rational>& lambdas);

}  // namespace twoorth

#endif
