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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "twoorth/eigensolver.hpp"
#include "twoorth/errors.hpp"

using namespace twoorth;

namespace {

// prod_{m<n} (J - lambda_m) / (lambda_n - lambda_m) applied to x^n kills every
// lower eigencomponent and leaves the monic P_n.
Polynomial projected(const DiffOperator& J, const std::vector<Rational>& lambdas, std::size_t n) {
    Polynomial p = Polynomial::monomial(n);
    for (std::size_t m = 0; m < n; ++m) p = (apply(J, p) - lambdas[m] * p) / (lambdas[n] - lambdas[m]);
    return p;
}

// Repeated sweeps in a random order over the triangular system.
Polynomial sweep_solve(const OperatorMatrix& M, std::size_t n, testing::Gen& g) {
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t pass = 0; pass <= n; ++pass) {
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(g.integer(0, static_cast<long>(i) - 1))]);
        for (std::size_t t : order) {
            Rational s;
            for (std::size_t j = t + 1; j <= n; ++j) s += M.at(t, j) * c[j];
            c[t] = s / (M.at(n, n) - M.at(t, t));
        }
    }
    return Polynomial(std::move(c));
}

DiffOperator admissible(testing::Gen& g, std::size_t n_max) {
    for (;;) {
        const DiffOperator J = g.op(3);
        try {
            (void)eigen_mps(J, n_max);
            return J;
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("operator matrix examples") {
    const OperatorMatrix I = operator_matrix(DiffOperator::identity(), 6);
    for (std::size_t t = 0; t <= 6; ++t)
        for (std::size_t n = 0; n <= 6; ++n) CHECK(I.at(t, n) == (t == n ? Rational(1) : Rational()));

    const DiffOperator euler({Polynomial(Rational(1)), Polynomial::x()});
    const OperatorMatrix E = operator_matrix(euler, 6);
    for (std::size_t t = 0; t <= 6; ++t)
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(E.at(t, n) == (t == n ? Rational(static_cast<long>(n) + 1) : Rational()));
}

TEST_CASE("matrix by formula equals matrix by apply") {
    testing::Gen g(71);
    for (int i = 0; i < 60; ++i) {
        const DiffOperator J = g.op(static_cast<std::size_t>(g.integer(0, 3)));
        const OperatorMatrix M = operator_matrix(J, 12);
        CHECK(M == operator_matrix_by_apply(J, 12));
        for (std::size_t n = 0; n <= 12; ++n) {
            CHECK(M.at(n, n) == lambda(J, 0, n));
            for (std::size_t t = n + 1; t <= 12; ++t) CHECK(M.at(t, n).is_zero());
        }
    }
}

TEST_CASE("eigen examples") {
    const DiffOperator euler({Polynomial(Rational(1)), Polynomial::x()});
    const EigenSolution s = eigen_mps(euler, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(s.P[n] == Polynomial::monomial(n));
        CHECK(s.lambdas[n] == Rational(static_cast<long>(n) + 1));
    }

    try {
        (void)eigen_mps(DiffOperator::identity(), 5);
        FAIL("expected RepeatedEigenvalue");
    } catch (const RepeatedEigenvalue& e) {
        CHECK(e.n() == 1);
        CHECK(e.m() == 0);
    }

    const DiffOperator singular({Polynomial(), Polynomial::x()});
    CHECK_THROWS_AS(eigen_mps(singular, 5), NonInvertible);
}

TEST_CASE("eigen_mps satisfies the eigen relation") {
    testing::Gen g(72);
    for (int i = 0; i < 60; ++i) {
        const DiffOperator J = admissible(g, 12);
        const EigenSolution s = eigen_mps(J, 12);
        REQUIRE(s.P.size() == 13);
        CHECK(verify_eigen(J, s.P, s.lambdas));
        for (std::size_t n = 0; n <= 12; ++n) {
            CHECK(s.P[n].degree() == Degree(n));
            CHECK(s.P[n].leading() == Rational(1));
            CHECK(apply(J, s.P[n]) == s.lambdas[n] * s.P[n]);
        }
    }
}

TEST_CASE("eigenpolynomials are unique") {
    testing::Gen g(73);
    for (int i = 0; i < 30; ++i) {
        const DiffOperator J = admissible(g, 10);
        const EigenSolution s = eigen_mps(J, 10);
        const OperatorMatrix M = operator_matrix(J, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK(s.P[n] == projected(J, s.lambdas, n));
            CHECK(s.P[n] == sweep_solve(M, n, g));
        }
    }
}

TEST_CASE("verify_eigen rejects wrong data") {
    testing::Gen g(74);
    const DiffOperator J = admissible(g, 8);
    const EigenSolution s = eigen_mps(J, 8);
    MPSPrefix bent = s.P;
    bent[5] += Polynomial::monomial(2, Rational(1, 3));
    CHECK_FALSE(verify_eigen(J, bent, s.lambdas));
    auto lam = s.lambdas;
    lam[3] += Rational(1);
    CHECK_FALSE(verify_eigen(J, s.P, lam));

    MPSPrefix mono;
    for (std::size_t n = 0; n <= 5; ++n) mono.push_back(Polynomial::monomial(n));
    const DiffOperator DI({Polynomial(Rational(1)), Polynomial(Rational(1))});
    CHECK_FALSE(verify_eigen(DI, mono, std::vector<Rational>(6, Rational(1))));
}

TEST_CASE("J-image of the eigen MPS is itself") {
    testing::Gen g(75);
    for (int i = 0; i < 20; ++i) {
        const DiffOperator J = admissible(g, 10);
        const EigenSolution s = eigen_mps(J, 10);
        const auto img = jimage_mps(J, s.P, 0);
        REQUIRE(img.size() == s.P.size());
        for (std::size_t n = 0; n < img.size(); ++n) CHECK(img[n] == s.P[n]);
    }
}
