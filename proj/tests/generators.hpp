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

// Seeded random instances for property tests.

#ifndef TWOORTH_TESTS_GENERATORS_HPP
#define TWOORTH_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "twoorth/diff_operator.hpp"
#include "twoorth/moment_form.hpp"
#include "twoorth/polynomial.hpp"
#include "twoorth/two_orth.hpp"

namespace twoorth::testing {

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (rng_() & 1U) != 0; }

    // +-p/q, p in [1, bound], q in [1, bound]
    Rational nonzero(long bound = 20) {
        long p = integer(1, bound);
        if (coin()) p = -p;
        return Rational(p, integer(1, bound));
    }
    // zero about a quarter of the time
    Rational rational(long bound = 20) { return integer(0, 3) == 0 ? Rational() : nonzero(bound); }

    Polynomial poly(std::size_t max_degree) {
        std::vector<Rational> c(max_degree + 1);
        for (auto& x : c) x = rational();
        return Polynomial(std::move(c));
    }
    Polynomial monic(std::size_t degree) {
        Polynomial p = poly(degree > 0 ? degree - 1 : 0);
        if (degree == 0) return Polynomial(Rational(1));
        return p + Polynomial::monomial(degree);
    }

    MomentForm form(std::size_t order) {
        std::vector<Rational> m(order + 1);
        for (auto& x : m) x = rational();
        return MomentForm(std::move(m));
    }

    // Normal-form operator a_0..a_order with deg a_nu <= nu.
    DiffOperator op(std::size_t order) {
        std::vector<Polynomial> a;
        for (std::size_t nu = 0; nu <= order; ++nu) a.push_back(poly(nu));
        return DiffOperator(std::move(a));
    }

    // Operator with lowering order k: a_nu = 0 below k, deg a_nu <= nu - k.
    DiffOperator lowering_op(std::size_t k, std::size_t order) {
        std::vector<Polynomial> a(k);
        a.push_back(Polynomial(nonzero()));
        for (std::size_t nu = k + 1; nu <= order; ++nu) a.push_back(poly(nu - k));
        return DiffOperator(std::move(a));
    }

    RecurrenceCoeffs recurrence(std::size_t n) {
        RecurrenceCoeffs rc;
        for (std::size_t i = 0; i <= n; ++i) {
            rc.beta_list.push_back(rational());
            rc.alpha_list.push_back(rational());
            rc.gamma_list.push_back(nonzero());
        }
        return rc;
    }

    MPSPrefix mps(std::size_t n_max) {
        MPSPrefix P;
        for (std::size_t n = 0; n <= n_max; ++n) P.push_back(monic(n));
        return P;
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace twoorth::testing

#endif
