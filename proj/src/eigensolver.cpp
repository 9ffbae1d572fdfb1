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

#include "twoorth/eigensolver.hpp"

#include <algorithm>

#include "twoorth/errors.hpp"

namespace twoorth {

OperatorMatrix operator_matrix(const DiffOperator& J, std::size_t n_max) {
    if (!J.is_normal_form()) throw InvalidOperator("operator_matrix needs an operator in normal form");
    OperatorMatrix M(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t tau = 0; tau <= n; ++tau) {
            Rational sum;
            for (std::size_t nu = 0; nu <= tau; ++nu) {
                const Rational a = J.a(tau - nu, n - nu);
                if (!a.is_zero()) sum += binomial(n, n - nu) * a;
            }
            M.at(tau, n) = sum;
        }
    }
    return M;
}

OperatorMatrix operator_matrix_by_apply(const DiffOperator& J, std::size_t n_max) {
    OperatorMatrix M(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Polynomial image = apply(J, Polynomial::monomial(n, 1));
        for (std::size_t tau = 0; tau <= n; ++tau) M.at(tau, n) = image.coeff(tau);
    }
    return M;
}

EigenSolution eigen_mps(const DiffOperator& J, std::size_t n_max) {
    const OperatorMatrix M = operator_matrix(J, n_max);
    EigenSolution out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational& l = M.at(n, n);
        if (l.is_zero()) throw NonInvertible(n);
        for (std::size_t m = 0; m < n; ++m) {
            if (out.lambdas[m] == l) throw RepeatedEigenvalue(n, m);
        }
        out.lambdas.push_back(l);
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational& l = out.lambdas[n];
        std::vector<Rational> c(n + 1);
        c[n] = 1;
        for (std::size_t t = n; t-- > 0;) {
            Rational s;
            for (std::size_t j = t + 1; j <= n; ++j) {
                if (!c[j].is_zero()) s += M.at(t, j) * c[j];
            }
            c[t] = s / (l - M.at(t, t));
        }
        out.P.emplace_back(std::move(c));
    }
    return out;
}

bool verify_eigen(const DiffOperator& J, const MPSPrefix& P, const std::vector<Rational>& lambdas) {
    const std::size_t count = std::min(P.size(), lambdas.size());
    for (std::size_t n = 0; n < count; ++n) {
        if (apply(J, P[n]) != lambdas[n] * P[n]) return false;
    }
    return true;
}

}  // namespace twoorth
