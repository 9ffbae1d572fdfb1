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

#ifndef TWOORTH_HAHN_HPP
#define TWOORTH_HAHN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "twoorth/diff_operator.hpp"
#include "twoorth/report.hpp"
#include "twoorth/two_orth.hpp"

namespace twoorth {

/// Coefficient forms of J^(1)(u_0), J^(1)(u_1), J^(2)(u_0), J^(2)(u_1) in
/// the basis (u_0, u_1), plus the pieces they are built from.
struct Intermediates {
    Polynomial p0, p1, f0, f1;
    Polynomial pbar0, pbar1, fbar0, fbar1;

    EABF eabf;                         // n_max = 2
    std::array<Rational, 6> lambdas;   // lambda_0^[0] .. lambda_5^[0]
};

/// Throws ZeroGamma, MissingCoefficient (rc must reach index 4), and
/// InvalidOperator unless J is a normal-form operator of order <= 3.
Intermediates intermediates(const DiffOperator& J, const RecurrenceCoeffs& rc);

/// Both J^(1)/J^(2) expansions and the relations they come from, including
/// the general images of u_{2n}, u_{2n+1} (n <= 2) and J(u_n) = lambda_n u_n.
/// `duals` holds u_0..u_5 at least.
Report j_expansion_check(const DiffOperator& J, const RecurrenceCoeffs& rc, std::span<const MomentForm> duals,
                         std::size_t M);

Report lemma_identities_check(const DiffOperator& J, const RecurrenceCoeffs& rc, const DualPair& duals,
                              std::size_t M);

/// D(Phi U) + Psi U = 0 for U = (u_0, u_1)^T.
struct ClassicalSystem {
    std::array<std::array<Polynomial, 2>, 2> phi;
    std::array<std::array<Polynomial, 2>, 2> psi;
    /// One line per entry: definition against closed form.
    Report closed_forms;
};

/// Builds Phi from its defining expressions and checks each entry against
/// the expanded closed form. Throws HypothesisViolated, ClosedFormMismatch.
ClassicalSystem phi_theorem4(const DiffOperator& J, const RecurrenceCoeffs& rc);

/// Same for the varpi entries and their table of closed forms.
ClassicalSystem varpi_theorem5(const DiffOperator& J, const RecurrenceCoeffs& rc, const Rational& tau);

/// Closed forms as printed; a33 is the leading coefficient of a_3.
std::array<Polynomial, 4> phi_closed_forms(const RecurrenceCoeffs& rc, const Rational& a33);
/// a02, a12 are the constant and linear coefficients of a_2.
std::array<Polynomial, 4> varpi_closed_forms(const RecurrenceCoeffs& rc, const Rational& tau, const Rational& a02,
                                             const Rational& a12);

/// Row-wise D(phi_i1 u_0 + phi_i2 u_1) + psi_i1 u_0 + psi_i2 u_1 = 0.
Report classical_system_check(const ClassicalSystem& sys, const DualPair& duals, std::size_t M);

/// deg phi11 <= 1, deg phi12 <= 1, deg phi21 <= 2, deg phi22 <= 1.
Report degree_bounds_check(const ClassicalSystem& sys);

/// a33 != 1/(gamma_1 (m+1)) for every m >= 0. Returns the offending m.
std::optional<std::size_t> theorem4_admissibility_witness(const Rational& a33, const Rational& gamma1);
/// a12 != 2 tau/(gamma_1 (m+1)) - 2 (beta_1 - beta_3)/(3 gamma_1) for every m >= 0.
std::optional<std::size_t> theorem5_admissibility_witness(const Rational& a12, const Rational& tau,
                                                          const RecurrenceCoeffs& rc);

/// Q_n = P'_{n+1} / (n+1).
MPSPrefix derivative_mps(const MPSPrefix& P);

struct HahnVerdict {
    bool classical = false;
    FitResult fit;
};

/// Positive iff the derivative sequence is itself 2-orthogonal.
HahnVerdict hahn_check(const MPSPrefix& P);

}  // namespace twoorth

#endif
