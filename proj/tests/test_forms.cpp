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

#include "generators.hpp"
#include "twoorth/errors.hpp"
#include "twoorth/moment_form.hpp"

using namespace twoorth;

namespace {

MomentForm form(std::initializer_list<long> m) {
    std::vector<Rational> v;
    for (long x : m) v.emplace_back(x);
    return MomentForm(std::move(v));
}

}  // namespace

TEST_CASE("act") {
    CHECK(act(form({1, 0, 0}), Polynomial(Rational(5))) == Rational(5));
    CHECK(act(form({1, 2, 3}), Polynomial{0, -1, 1}) == Rational(1));
    CHECK_THROWS_AS(act(form({1, 2}), Polynomial::monomial(2)), OrderExceeded);
}

TEST_CASE("left multiplication") {
    const MomentForm u = form({1, 2, 5});
    CHECK(left_mul(Polynomial(Rational(1)), u) == u);
    CHECK(left_mul(Polynomial::x(), u) == form({2, 5}));
    CHECK(left_mul(Polynomial{-2, 1}, u) == form({0, 1}));
    CHECK(left_mul(Polynomial(), u) == MomentForm::zero(2));
    CHECK_THROWS_AS(left_mul(Polynomial::monomial(3), u), OrderExceeded);
}

TEST_CASE("form derivative") {
    CHECK(D(form({1, 0, 0})) == form({0, -1, 0}));
    CHECK(D(D(form({1, 0, 0, 0}))) == form({0, 0, 2, 0}));
    CHECK(D(MomentForm::zero(5)) == MomentForm::zero(5));
    CHECK(D(form({3})) == MomentForm::zero(0));
}

TEST_CASE("truncated equality") {
    const MomentForm u = form({1, 2, 3, 4});
    CHECK(equal_up_to(u, u, 3));
    CHECK(equal_up_to(u, form({1, 2, 3, 9}), 2));
    CHECK_FALSE(equal_up_to(form({1, 2}), form({1, 3}), 1));
    CHECK_THROWS_AS(equal_up_to(u, form({1, 2}), 2), OrderExceeded);
}

TEST_CASE("product rule D(pu) = p'u + pDu") {
    testing::Gen g(21);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = g.poly(3);
        const MomentForm u = g.form(20);
        const MomentForm lhs = D(left_mul(p, u));
        const MomentForm rhs = left_mul(derivative(p), u) + left_mul(p, D(u));
        const std::size_t deg = p.is_zero() ? 0 : p.degree().value();
        CHECK(equal_up_to(lhs, rhs, 20 - deg - 1));
    }
}

TEST_CASE("left multiplication composes") {
    testing::Gen g(22);
    for (int i = 0; i < 100; ++i) {
        const Polynomial f = g.poly(3), h = g.poly(3);
        const MomentForm u = g.form(20);
        const MomentForm a = left_mul(f * h, u);
        const MomentForm b = left_mul(f, left_mul(h, u));
        CHECK(equal_up_to(a, b, std::min(a.order(), b.order())));
    }
}

TEST_CASE("<Du, p> = -<u, p'>") {
    testing::Gen g(23);
    for (int i = 0; i < 100; ++i) {
        const MomentForm u = g.form(12);
        const Polynomial p = g.poly(12);
        CHECK(act(D(u), p) == -act(u, derivative(p)));
    }
}

TEST_CASE("<fu, p> = <u, fp>") {
    testing::Gen g(24);
    for (int i = 0; i < 100; ++i) {
        const MomentForm u = g.form(15);
        const Polynomial f = g.poly(4), p = g.poly(10);
        CHECK(act(left_mul(f, u), p) == act(u, f * p));
    }
}
