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

#ifndef TWOORTH_TWO_ORTH_HPP
#define TWOORTH_TWO_ORTH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twoorth/moment_form.hpp"
#include "twoorth/polynomial.hpp"
#include "twoorth/rational.hpp"
#include "twoorth/report.hpp"

namespace twoorth {

/**
 * Coefficients of the four-term recurrence
 *
 *     P_{n+3} = (x - beta_{n+2}) P_{n+2} - alpha_{n+2} P_{n+1} - gamma_{n+1} P_n
 *
 * with P_0 = 1, P_1 = x - beta_0, P_2 = (x - beta_1) P_1 - alpha_1.
 * `alpha_list[i]` holds alpha_{i+1} and `gamma_list[i]` holds gamma_{i+1}.
 */
struct RecurrenceCoeffs {
    std::vector<Rational> beta_list;
    std::vector<Rational> alpha_list;
    std::vector<Rational> gamma_list;

    /// Each throws MissingCoefficient when the entry is not stored.
    const Rational& beta(std::size_t n) const;
    const Rational& alpha(std::size_t n) const;  // n >= 1
    const Rational& gamma(std::size_t n) const;  // n >= 1

    /// True when every stored gamma is nonzero.
    bool regular() const;

    /// Exactly the entries generate() reads for P_0..P_{n_max}: beta up to
    /// n_max - 1, alpha up to n_max - 1, gamma up to n_max - 2.
    RecurrenceCoeffs truncated_for(std::size_t n_max) const;

    friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;
};

using MPSPrefix = std::vector<Polynomial>;

struct DualPair {
    MomentForm u0;
    MomentForm u1;
};

/// P_0..P_{n_max}. Throws MissingCoefficient.
MPSPrefix generate(const RecurrenceCoeffs& rc, std::size_t n_max);

/// xP_0 = P_1 + beta_0 P_0 and xP_{n+1} = P_{n+2} + beta_{n+1} P_{n+1} + sum_{nu<=n} chi[n][nu] P_nu.
struct StructureCoeffs {
    std::vector<Rational> beta;
    std::vector<std::vector<Rational>> chi;
};

/// Expands f (deg f < P.size()) in the P basis.
std::vector<Rational> expand_in_basis(const MPSPrefix& P, const Polynomial& f);

StructureCoeffs structure_coeffs(const MPSPrefix& P);

struct NotTwoOrthogonal {
    std::size_t n = 0;
    std::size_t nu = 0;
    std::string reason;
};

using FitResult = std::variant<RecurrenceCoeffs, NotTwoOrthogonal>;

/// Fits beta_0..beta_{L-2}, alpha_1..alpha_{L-2}, gamma_1..gamma_{L-3} for
/// L = P.size() >= 4, or reports the first (n, nu) that breaks the
/// four-term shape. Scanning is by increasing n; at each n the low-order
/// chi are inspected before gamma_n.
FitResult fit_2orth_recurrence(const MPSPrefix& P);

/// Coefficients c[n][m] of x^n = sum_m c[n][m] P_m for n <= N.
std::vector<std::vector<Rational>> monomial_expansions(const MPSPrefix& P, std::size_t N);

/// (u_k)_n = c[n][k] for n <= N. Throws OrderExceeded if P is too short or k > N.
MomentForm dual_moments(const MPSPrefix& P, std::size_t k, std::size_t N);

/// u_0..u_{count-1}, each to order N.
std::vector<MomentForm> dual_sequence(const MPSPrefix& P, std::size_t count, std::size_t N);

/// E_n, B_n, F_n for 0 <= n <= n_max and A_n for -1 <= n <= n_max - 1.
struct EABF {
    std::vector<Polynomial> E;
    std::vector<Polynomial> B;
    std::vector<Polynomial> F;
    std::vector<Polynomial> A_shifted;  // A_shifted[i] = A_{i-1}

    const Polynomial& A(long n) const { return A_shifted.at(static_cast<std::size_t>(n + 1)); }
};

/// Needs beta through 2 n_max - 1 and alpha, gamma through 2 n_max.
/// Throws ZeroGamma, MissingCoefficient.
EABF eabf_polys(const RecurrenceCoeffs& rc, std::size_t n_max);

/**
 * x u_n = u_{n-1} + beta_n u_n + alpha_{n+1} u_{n+1} + gamma_{n+1} u_{n+2}
 * for every n with u_{n+2} available, and the decompositions
 * u_{2n} = E_n u_0 + A_{n-1} u_1, u_{2n+1} = B_n u_0 + F_n u_1 for n <= 2.
 */
Report check_dual_identities(const RecurrenceCoeffs& rc, std::span<const MomentForm> duals, std::size_t M);

/// <u_nu, P_m P_n> = 0 for n >= 2m + nu + 1 and != 0 at n = 2m + nu, nu in {0, 1}.
Report orthogonality_check(const MPSPrefix& P, const DualPair& duals, std::size_t m_max);

}  // namespace twoorth

#endif
