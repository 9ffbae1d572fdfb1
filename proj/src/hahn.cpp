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

#include "twoorth/hahn.hpp"

#include <stdexcept>

#include "twoorth/errors.hpp"

namespace twoorth {

namespace {

const Rational kHalf(1, 2);

Polynomial d1(const Polynomial& p) { return derivative(p); }
Polynomial d2(const Polynomial& p) { return derivative(p, 2); }

void require_third_order(const DiffOperator& J) {
    if (!J.is_normal_form()) throw InvalidOperator("expected an operator in normal form");
    if (const auto k = J.order(); k && *k > 3) {
        throw InvalidOperator("expected an operator of order at most 3, got " + std::to_string(*k));
    }
}

// a_1(x) = -(x - beta_0) / (3 gamma_1)
Polynomial forced_a1(const RecurrenceCoeffs& rc) {
    const Rational c = -inverse(Rational(3) * rc.gamma(1));
    return Polynomial{-c * rc.beta(0), c};
}

// Some m >= 0 with v == 1/(m+1), if any.
std::optional<std::size_t> reciprocal_index(const Rational& v) {
    if (v.sign() <= 0) return std::nullopt;
    const Rational r = inverse(v);
    if (!r.is_integer()) return std::nullopt;
    return static_cast<std::size_t>(r.numerator().get_ui() - 1);
}

MomentForm J1(const DiffOperator& J, const MomentForm& u) { return transpose_apply(shifted(J, 1), u); }
MomentForm J2(const DiffOperator& J, const MomentForm& u) { return transpose_apply(shifted(J, 2), u); }

// f(x) J(u) - f' J^(1)(u) + f''/2 J^(2)(u) - f'''/6 J^(3)(u)
MomentForm leibniz_image(const DiffOperator& J, const Polynomial& f, const MomentForm& u) {
    MomentForm out = f * transpose_apply(J, u);
    Polynomial df = f;
    for (std::size_t nu = 1; nu <= 3; ++nu) {
        df = derivative(df);
        Rational c = inverse(factorial(nu));
        if (nu % 2 == 1) c = -c;
        out = out + c * (df * transpose_apply(shifted(J, nu), u));
    }
    return out;
}

void closed_form_line(Report& report, std::string tag, const Polynomial& def, const Polynomial& closed) {
    CheckLine line = compare_polynomials(tag, 0, def, closed);
    if (!line.passed) throw ClosedFormMismatch(tag, to_string(def), to_string(closed));
    report.add(std::move(line));
}

}  // namespace

Intermediates intermediates(const DiffOperator& J, const RecurrenceCoeffs& rc) {
    require_third_order(J);
    Intermediates out;
    out.eabf = eabf_polys(rc, 2);
    const auto ls = lambda_seq(J, 0, 6);
    for (std::size_t i = 0; i < 6; ++i) out.lambdas[i] = ls[i];
    const auto& l = out.lambdas;
    const EABF& q = out.eabf;
    const Polynomial& E1 = q.E[1];
    const Polynomial& E2 = q.E[2];
    const Polynomial& B1 = q.B[1];
    const Polynomial& B2 = q.B[2];
    const Polynomial& F1 = q.F[1];
    const Polynomial& F2 = q.F[2];
    const Polynomial& A0 = q.A(0);
    const Polynomial& A1 = q.A(1);
    const Rational& g1 = rc.gamma(1);
    const Rational& g2 = rc.gamma(2);
    const Rational& a2 = rc.alpha(2);

    out.p0 = g1 * (l[0] - l[2]) * E1;
    out.p1 = g1 * (l[1] - l[2]) * A0;
    out.f0 = g2 * (l[0] - l[3]) * B1 + a2 * (l[0] - l[2]) * E1;
    out.f1 = g2 * (l[1] - l[3]) * F1 + a2 * (l[1] - l[2]) * A0;

    const Rational g13 = g1 * rc.gamma(3);
    out.pbar0 = g13 * ((l[4] - l[0]) * E2 + d1(E2) * out.p0 + d1(A1) * out.f0);
    out.pbar1 = g13 * ((l[4] - l[1]) * A1 + d1(E2) * out.p1 + d1(A1) * out.f1);

    const Rational g24 = g2 * rc.gamma(4);
    out.fbar0 = g24 * ((l[5] - l[0]) * B2 + d1(B2) * out.p0 + d1(F2) * out.f0 - kHalf * d2(B2) * out.pbar0);
    out.fbar1 = g24 * ((l[5] - l[1]) * F2 + d1(B2) * out.p1 + d1(F2) * out.f1 - kHalf * d2(B2) * out.pbar1);
    return out;
}

Report j_expansion_check(const DiffOperator& J, const RecurrenceCoeffs& rc, std::span<const MomentForm> duals,
                         std::size_t M) {
    if (duals.size() < 6) throw std::invalid_argument("j_expansion_check needs u_0..u_5");
    const Intermediates I = intermediates(J, rc);
    const auto& l = I.lambdas;
    const EABF& q = I.eabf;
    const MomentForm& u0 = duals[0];
    const MomentForm& u1 = duals[1];
    const MomentForm j1u0 = J1(J, u0);
    const MomentForm j1u1 = J1(J, u1);
    const MomentForm j2u0 = J2(J, u0);
    const MomentForm j2u1 = J2(J, u1);

    Report r;
    r.add(compare_forms("Eq-9.1", 0, j1u0, I.p0 * u0 + I.p1 * u1, M));
    r.add(compare_forms("Eq-9.2", 0, j1u1, I.f0 * u0 + I.f1 * u1, M));
    r.add(compare_forms("Eq-9.3", 0, j2u0, I.pbar0 * u0 + I.pbar1 * u1, M));
    r.add(compare_forms("Eq-9.4", 0, j2u1, I.fbar0 * u0 + I.fbar1 * u1, M));

    const Rational& g1 = rc.gamma(1);
    r.add(compare_forms("Eq-7.1", 1, l[2] * duals[2],
                        l[0] * (q.E[1] * u0) - inverse(g1) * j1u0 + l[1] * (q.A(0) * u1), M));
    r.add(compare_forms("Eq-7.2", 2, l[4] * duals[4],
                        l[0] * (q.E[2] * u0) - d1(q.E[2]) * j1u0 + kHalf * (d2(q.E[2]) * j2u0) +
                            l[1] * (q.A(1) * u1) - d1(q.A(1)) * j1u1,
                        M));
    r.add(compare_forms("Eq-8.1", 1, l[3] * duals[3],
                        l[0] * (q.B[1] * u0) - d1(q.B[1]) * j1u0 + l[1] * (q.F[1] * u1) - d1(q.F[1]) * j1u1, M));
    r.add(compare_forms("Eq-8.2", 2, l[5] * duals[5],
                        l[0] * (q.B[2] * u0) - d1(q.B[2]) * j1u0 + kHalf * (d2(q.B[2]) * j2u0) +
                            l[1] * (q.F[2] * u1) - d1(q.F[2]) * j1u1 + kHalf * (d2(q.F[2]) * j2u1),
                        M));

    for (std::size_t n = 0; n <= 2; ++n) {
        const long idx = static_cast<long>(n);
        r.add(compare_forms("Eq-J(u2n)", idx, l[2 * n] * duals[2 * n],
                            leibniz_image(J, q.E[n], u0) + leibniz_image(J, q.A(idx - 1), u1), M));
        r.add(compare_forms("Eq-J(u2n+1)", idx, l[2 * n + 1] * duals[2 * n + 1],
                            leibniz_image(J, q.B[n], u0) + leibniz_image(J, q.F[n], u1), M));
    }
    for (std::size_t n = 0; n < duals.size(); ++n) {
        r.add(compare_forms("Eq-J(u_n)", static_cast<long>(n), transpose_apply(J, duals[n]),
                            lambda(J, 0, n) * duals[n], M));
    }
    return r;
}

Report lemma_identities_check(const DiffOperator& J, const RecurrenceCoeffs& rc, const DualPair& duals,
                              std::size_t M) {
    const Intermediates I = intermediates(J, rc);
    const MomentForm& u0 = duals.u0;
    const MomentForm& u1 = duals.u1;
    const Polynomial& a1 = J.a(1);
    const Polynomial& a2 = J.a(2);
    const MomentForm zero = MomentForm::zero(std::min(u0.order(), u1.order()));

    Report r;
    r.add(compare_forms("Eq-Da2u0", 0, D(a2 * u0), (Rational(2) * I.p0 + Rational(4) * a1) * u0 + Rational(2) * I.p1 * u1,
                        M));
    r.add(compare_forms("Eq-Da2u1", 1, kHalf * D(D(a2 * u1)) - Rational(3) * J.a(1, 1) * u1,
                        D(I.f0 * u0 + (Rational(2) * a1 + I.f1) * u1), M));
    r.add(compare_forms("Eq-Dcomplete", 0,
                        D(I.pbar0 * u0 + I.pbar1 * u1) + (Rational(2) * a1 + Rational(4) * I.p0) * u0 +
                            Rational(4) * I.p1 * u1,
                        zero, M));
    return r;
}

std::optional<std::size_t> theorem4_admissibility_witness(const Rational& a33, const Rational& gamma1) {
    return reciprocal_index(a33 * gamma1);
}

std::optional<std::size_t> theorem5_admissibility_witness(const Rational& a12, const Rational& tau,
                                                          const RecurrenceCoeffs& rc) {
    const Rational& g1 = rc.gamma(1);
    const Rational shift = Rational(2) * (rc.beta(1) - rc.beta(3)) / (Rational(3) * g1);
    return reciprocal_index((a12 + shift) * g1 / (Rational(2) * tau));
}

std::array<Polynomial, 4> phi_closed_forms(const RecurrenceCoeffs& rc, const Rational& A) {
    const Rational &b0 = rc.beta(0), &b1 = rc.beta(1), &b2 = rc.beta(2);
    const Rational &al2 = rc.alpha(2), &al3 = rc.alpha(3);
    const Rational &g1 = rc.gamma(1), &g2 = rc.gamma(2);
    const Rational third(1, 3);
    const Rational Ag1 = A * g1;

    Polynomial c11{A * (al2 * b0 - g1) - al2 * b0 / (Rational(3) * g1) + 1, al2 * (inverse(Rational(3) * g1) - A)};
    Polynomial c12{third * (Rational(-2) * b0 + b1 * (Rational(2) - Rational(3) * Ag1)), Ag1};
    const Rational den = Rational(3) * g1 * g2;
    Polynomial c21{(al3 * (al2 * b0 - g1) * (Rational(1) - Rational(9) * Ag1) +
                    Rational(2) * b0 * (b0 + b2 * (Rational(-1) + Rational(6) * Ag1)) * g2) /
                       den,
                   (al2 * al3 * (Rational(-1) + Rational(9) * Ag1) -
                    Rational(2) * (b2 * (Rational(-1) + Rational(6) * Ag1) + b0 * (Rational(1) + Rational(6) * Ag1)) * g2) /
                       den,
                   Rational(4) * A};
    Polynomial c22{(al3 * b1 * (Rational(-1) + Rational(9) * Ag1) + Rational(3) * (Rational(1) - Rational(4) * Ag1) * g2) /
                       (Rational(3) * g2),
                   al3 * (Rational(1) - Rational(9) * Ag1) / (Rational(3) * g2)};
    return {c11, c12, c21, c22};
}

std::array<Polynomial, 4> varpi_closed_forms(const RecurrenceCoeffs& rc, const Rational& t, const Rational& a02,
                                             const Rational& a12) {
    const Rational &b0 = rc.beta(0), &b1 = rc.beta(1), &b2 = rc.beta(2), &b3 = rc.beta(3);
    const Rational &al1 = rc.alpha(1), &al2 = rc.alpha(2), &al3 = rc.alpha(3);
    const Rational &g1 = rc.gamma(1), &g2 = rc.gamma(2);
    const Rational two(2), three(3), six(6), seven(7), nine(9);

    const Rational s = b1 + b2 - two * (b3 + t);  // recurring combination
    const Rational s2 = b1 + b2 - two * b3 + t;
    const Rational d6 = six * g1 * t;
    const Rational d9 = nine * g1 * g1 * g2 * t;

    Polynomial w11{(three * b0 * g2 + al2 * b0 * s + g1 * (-two * b0 - three * b1 + two * b3 + six * t)) / d6,
                   (three * (g1 - g2) - al2 * s) / d6};
    Polynomial w12{(g1 * (three * g1 * a02 - two * (al2 + two * b0 * t + b1 * (b1 - b3 - two * t))) +
                    al1 * (-g1 + three * g2 + al2 * s)) /
                       d6,
                   (three * g1 * a12 + two * b1 - two * b3) / (six * t)};
    Polynomial w21{(-three * al1 * b0 * g2 * g2 +
                    g2 * g1 * (al1 * (two * b0 - two * b3 + three * (b1 + t)) + six * b0 * (b0 - b2) * t) +
                    al2 * b0 * (three * al3 * g1 * t - al1 * g2 * s2) - three * al3 * g1 * g1 * t) /
                       d9,
                   (al2 * (al1 * g2 * s2 - three * al3 * g1 * t) +
                    three * g2 * (al1 * (g2 - g1) + two * (b2 - b0) * g1 * t)) /
                       d9};
    Polynomial w22{(al1 * g1 *
                        (g2 * (-three * g1 * a02 + seven * b0 * t + two * (b1 * b1 + b1 * (t - b3) - three * b2 * t)) +
                         al2 * (two * g2 + three * al3 * t)) -
                    al1 * al1 * g2 * (-g1 + three * g2 + al2 * s2) - three * g1 * g1 * t * (al3 * b1 - three * g2)) /
                       d9,
                   (three * al3 * g1 * t - al1 * g2 * (three * g1 * a12 + two * b1 - two * b3 + three * t)) /
                       (nine * g1 * g2 * t)};
    return {w11, w12, w21, w22};
}

ClassicalSystem phi_theorem4(const DiffOperator& J, const RecurrenceCoeffs& rc) {
    require_third_order(J);
    if (!J.a(2).is_zero()) throw HypothesisViolated("a2 = 0", "a2 = " + to_string(J.a(2)));
    const Polynomial a1 = forced_a1(rc);
    if (J.a(1) != a1) {
        throw HypothesisViolated("a1 = -(x - beta0)/(3 gamma1)", "a1 = " + to_string(J.a(1)) + ", expected " + to_string(a1));
    }
    if (!rc.alpha(1).is_zero()) throw HypothesisViolated("alpha1 = 0", "alpha1 = " + rc.alpha(1).to_string());
    const Rational a33 = J.a(3, 3);
    if (auto m = theorem4_admissibility_witness(a33, rc.gamma(1))) {
        throw HypothesisViolated("a3^[3] != 1/(gamma1 (m+1))", "m = " + std::to_string(*m));
    }

    const Intermediates I = intermediates(J, rc);
    const Rational& g1 = rc.gamma(1);
    ClassicalSystem sys;
    sys.phi[0][0] = -g1 * I.f0;
    sys.phi[0][1] = -g1 * (Rational(2) * a1 + I.f1);
    sys.phi[1][0] = I.pbar0;
    sys.phi[1][1] = I.pbar1;
    sys.psi[0][1] = Polynomial(Rational(1));
    sys.psi[1][0] = Rational(2) * I.eabf.E[1];

    const auto closed = phi_closed_forms(rc, a33);
    const char* tags[4] = {"Eq-phi-1,1", "Eq-phi-1,2", "Eq-phi-2,1", "Eq-phi-2,2"};
    for (std::size_t i = 0; i < 4; ++i) closed_form_line(sys.closed_forms, tags[i], sys.phi[i / 2][i % 2], closed[i]);
    return sys;
}

ClassicalSystem varpi_theorem5(const DiffOperator& J, const RecurrenceCoeffs& rc, const Rational& tau) {
    if (tau.is_zero()) throw HypothesisViolated("tau != 0", "tau = 0");
    require_third_order(J);
    if (J.a(3) != tau * J.a(2)) {
        throw HypothesisViolated("a3 = tau a2", "a3 = " + to_string(J.a(3)) + ", a2 = " + to_string(J.a(2)));
    }
    if (!J.a(2, 2).is_zero()) throw HypothesisViolated("a2^[2] = 0", "a2^[2] = " + J.a(2, 2).to_string());
    const Rational alpha4 = rc.alpha(2) * rc.gamma(3) / rc.gamma(2);
    if (rc.alpha(4) != alpha4) {
        throw HypothesisViolated("alpha4 = alpha2 gamma3/gamma2",
                                 "alpha4 = " + rc.alpha(4).to_string() + ", expected " + alpha4.to_string());
    }
    const Polynomial a1 = forced_a1(rc);
    if (J.a(1) != a1) {
        throw HypothesisViolated("a1 = -(x - beta0)/(3 gamma1)", "a1 = " + to_string(J.a(1)) + ", expected " + to_string(a1));
    }
    const Rational a11 = J.a(1, 1);
    const Rational a12 = J.a(1, 2);
    if (auto m = theorem5_admissibility_witness(a12, tau, rc)) {
        throw HypothesisViolated("a1^[2] != 2 tau/(gamma1 (m+1)) - 2 (beta1 - beta3)/(3 gamma1)",
                                 "m = " + std::to_string(*m));
    }

    const Intermediates I = intermediates(J, rc);
    const Rational inv2t = inverse(Rational(2) * tau);
    const Rational inv3a = inverse(Rational(3) * a11);
    const Polynomial& A0 = I.eabf.A(0);
    const Rational two_thirds(2, 3);

    ClassicalSystem sys;
    sys.phi[0][0] = inv3a * (inv2t * I.fbar0 + I.f0);
    sys.phi[0][1] = inv3a * (Rational(2) * a1 + I.f1 - inv2t * (J.a(2) - I.fbar1));
    sys.phi[1][0] = I.pbar0 + two_thirds * A0 * sys.phi[0][0];
    sys.phi[1][1] = I.pbar1 + two_thirds * A0 * sys.phi[0][1];
    sys.psi[0][1] = Polynomial(Rational(1));
    sys.psi[1][0] = Rational(2) * I.eabf.E[1];
    sys.psi[1][1] = Rational(2) * A0;

    const auto closed = varpi_closed_forms(rc, tau, J.a(0, 2), a12);
    const char* tags[4] = {"Table-1-varpi11", "Table-1-varpi12", "Table-1-varpi21", "Table-1-varpi22"};
    for (std::size_t i = 0; i < 4; ++i) closed_form_line(sys.closed_forms, tags[i], sys.phi[i / 2][i % 2], closed[i]);
    return sys;
}

Report classical_system_check(const ClassicalSystem& sys, const DualPair& duals, std::size_t M) {
    const MomentForm& u0 = duals.u0;
    const MomentForm& u1 = duals.u1;
    const MomentForm zero = MomentForm::zero(std::min(u0.order(), u1.order()));
    Report r;
    for (std::size_t i = 0; i < 2; ++i) {
        const MomentForm lhs = D(sys.phi[i][0] * u0 + sys.phi[i][1] * u1) + sys.psi[i][0] * u0 + sys.psi[i][1] * u1;
        r.add(compare_forms("Eq-EqClassic-" + std::to_string(i + 1), static_cast<long>(i + 1), lhs, zero, M));
    }
    return r;
}

Report degree_bounds_check(const ClassicalSystem& sys) {
    Report r;
    r.add(degree_at_most("deg-phi-1,1", 0, sys.phi[0][0], 1));
    r.add(degree_at_most("deg-phi-1,2", 0, sys.phi[0][1], 1));
    r.add(degree_at_most("deg-phi-2,1", 0, sys.phi[1][0], 2));
    r.add(degree_at_most("deg-phi-2,2", 0, sys.phi[1][1], 1));
    return r;
}

MPSPrefix derivative_mps(const MPSPrefix& P) {
    if (P.size() < 2) throw std::invalid_argument("derivative_mps needs P_0 and P_1");
    MPSPrefix Q;
    Q.reserve(P.size() - 1);
    for (std::size_t n = 0; n + 1 < P.size(); ++n) {
        Q.push_back(derivative(P[n + 1]) / Rational(static_cast<long>(n + 1)));
    }
    return Q;
}

HahnVerdict hahn_check(const MPSPrefix& P) {
    if (P.size() < 5) throw std::invalid_argument("hahn_check needs P_0..P_4");
    HahnVerdict v{false, fit_2orth_recurrence(derivative_mps(P))};
    v.classical = std::holds_alternative<RecurrenceCoeffs>(v.fit);
    return v;
}

}  // namespace twoorth
