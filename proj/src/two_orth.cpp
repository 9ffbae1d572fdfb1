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

#include "twoorth/two_orth.hpp"

#include <algorithm>
#include <stdexcept>

#include "twoorth/errors.hpp"

namespace twoorth {

namespace {

const Rational& lookup(const std::vector<Rational>& list, std::size_t n, std::size_t offset, const char* name) {
    if (n < offset || n - offset >= list.size()) throw MissingCoefficient(name, n);
    return list[n - offset];
}

std::vector<Rational> prefix(const std::vector<Rational>& v, std::size_t count) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size()))};
}

// (x - b) p
Polynomial times_shifted_x(const Polynomial& p, const Rational& b) {
    return Polynomial::x() * p - b * p;
}

}  // namespace

const Rational& RecurrenceCoeffs::beta(std::size_t n) const { return lookup(beta_list, n, 0, "beta"); }
const Rational& RecurrenceCoeffs::alpha(std::size_t n) const { return lookup(alpha_list, n, 1, "alpha"); }
const Rational& RecurrenceCoeffs::gamma(std::size_t n) const { return lookup(gamma_list, n, 1, "gamma"); }

bool RecurrenceCoeffs::regular() const {
    return std::none_of(gamma_list.begin(), gamma_list.end(), [](const Rational& g) { return g.is_zero(); });
}

RecurrenceCoeffs RecurrenceCoeffs::truncated_for(std::size_t n_max) const {
    return {prefix(beta_list, n_max), prefix(alpha_list, n_max > 0 ? n_max - 1 : 0),
            prefix(gamma_list, n_max > 1 ? n_max - 2 : 0)};
}

MPSPrefix generate(const RecurrenceCoeffs& rc, std::size_t n_max) {
    MPSPrefix P;
    P.reserve(n_max + 1);
    P.emplace_back(Rational(1));
    if (n_max >= 1) P.push_back(times_shifted_x(P[0], rc.beta(0)));
    if (n_max >= 2) P.push_back(times_shifted_x(P[1], rc.beta(1)) - rc.alpha(1) * P[0]);
    for (std::size_t m = 3; m <= n_max; ++m) {
        // m = n + 3
        P.push_back(times_shifted_x(P[m - 1], rc.beta(m - 1)) - rc.alpha(m - 1) * P[m - 2] -
                    rc.gamma(m - 2) * P[m - 3]);
    }
    return P;
}

std::vector<Rational> expand_in_basis(const MPSPrefix& P, const Polynomial& f) {
    if (f.is_zero()) return {};
    const std::size_t deg = f.degree().value();
    if (deg >= P.size()) throw OrderExceeded(deg, P.empty() ? 0 : P.size() - 1);
    std::vector<Rational> c(deg + 1);
    Polynomial r = f;
    for (std::size_t m = deg + 1; m-- > 0;) {
        c[m] = r.coeff(m);
        if (!c[m].is_zero()) r -= c[m] * P[m];
    }
    return c;
}

StructureCoeffs structure_coeffs(const MPSPrefix& P) {
    if (P.size() < 2) throw std::invalid_argument("structure_coeffs needs P_0 and P_1");
    StructureCoeffs out;
    out.beta.push_back(P[1].is_zero() ? Rational() : -P[1].coeff(0));
    for (std::size_t n = 0; n + 2 < P.size(); ++n) {
        auto c = expand_in_basis(P, Polynomial::x() * P[n + 1] - P[n + 2]);
        c.resize(n + 2);
        out.beta.push_back(c[n + 1]);
        c.pop_back();
        out.chi.push_back(std::move(c));
    }
    return out;
}

FitResult fit_2orth_recurrence(const MPSPrefix& P) {
    if (P.size() < 4) throw std::invalid_argument("fit_2orth_recurrence needs at least P_0..P_3");
    const StructureCoeffs sc = structure_coeffs(P);
    RecurrenceCoeffs rc;
    rc.beta_list = sc.beta;
    for (std::size_t n = 0; n < sc.chi.size(); ++n) {
        const auto& chi = sc.chi[n];
        for (std::size_t nu = 0; nu + 1 < n; ++nu) {
            if (!chi[nu].is_zero()) {
                return NotTwoOrthogonal{n, nu, "chi_{" + std::to_string(n) + "," + std::to_string(nu) +
                                                   "} = " + chi[nu].to_string() + " is nonzero"};
            }
        }
        if (n >= 1) {
            if (chi[n - 1].is_zero()) {
                return NotTwoOrthogonal{n, n - 1, "gamma_" + std::to_string(n) + " = 0"};
            }
            rc.gamma_list.push_back(chi[n - 1]);
        }
        rc.alpha_list.push_back(chi[n]);
    }
    return rc;
}

std::vector<std::vector<Rational>> monomial_expansions(const MPSPrefix& P, std::size_t N) {
    if (P.size() <= N) throw OrderExceeded(N, P.empty() ? 0 : P.size() - 1);
    std::vector<std::vector<Rational>> c;
    c.reserve(N + 1);
    c.push_back({Rational(1)});
    // x^{n+1} = sum_m c[n][m] x P_m, and x P_m = P_{m+1} + sum_{j<=m} s[m][j] P_j.
    std::vector<std::vector<Rational>> xP;
    for (std::size_t m = 0; m < N; ++m) {
        auto s = expand_in_basis(P, Polynomial::x() * P[m]);
        s.resize(m + 2);
        xP.push_back(std::move(s));
    }
    for (std::size_t n = 0; n < N; ++n) {
        std::vector<Rational> next(n + 2);
        for (std::size_t m = 0; m <= n; ++m) {
            const Rational& cm = c[n][m];
            if (cm.is_zero()) continue;
            for (std::size_t j = 0; j < xP[m].size(); ++j) {
                if (!xP[m][j].is_zero()) next[j] += cm * xP[m][j];
            }
        }
        c.push_back(std::move(next));
    }
    return c;
}

MomentForm dual_moments(const MPSPrefix& P, std::size_t k, std::size_t N) {
    if (k > N) throw OrderExceeded(k, N);
    const auto c = monomial_expansions(P, N);
    std::vector<Rational> m(N + 1);
    for (std::size_t n = k; n <= N; ++n) m[n] = c[n][k];
    return MomentForm(std::move(m));
}

std::vector<MomentForm> dual_sequence(const MPSPrefix& P, std::size_t count, std::size_t N) {
    if (count > N + 1) throw OrderExceeded(count - 1, N);
    const auto c = monomial_expansions(P, N);
    std::vector<MomentForm> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Rational> m(N + 1);
        for (std::size_t n = k; n <= N; ++n) m[n] = c[n][k];
        out.emplace_back(std::move(m));
    }
    return out;
}

EABF eabf_polys(const RecurrenceCoeffs& rc, std::size_t n_max) {
    auto g = [&](std::size_t i) -> const Rational& {
        const Rational& v = rc.gamma(i);
        if (v.is_zero()) throw ZeroGamma(i);
        return v;
    };
    EABF out;
    out.E.emplace_back(Rational(1));
    out.B.emplace_back();
    out.F.emplace_back(Rational(1));
    out.A_shifted.emplace_back();
    if (n_max == 0) return out;

    out.E.push_back(times_shifted_x(Polynomial(Rational(1)), rc.beta(0)) / g(1));
    out.A_shifted.push_back(Polynomial(-rc.alpha(1) / g(1)));

    for (std::size_t n = 0; n < n_max; ++n) {
        const std::size_t i = 2 * n + 1;
        const auto& E = out.E;
        const auto& F = out.F;
        out.B.push_back((times_shifted_x(out.B[n], rc.beta(i)) - E[n] - rc.alpha(i + 1) * E[n + 1]) / g(i + 1));
        out.F.push_back((times_shifted_x(F[n], rc.beta(i)) - out.A(static_cast<long>(n) - 1) -
                         rc.alpha(i + 1) * out.A(static_cast<long>(n))) /
                        g(i + 1));
        if (n + 2 > n_max) break;
        out.E.push_back((times_shifted_x(out.E[n + 1], rc.beta(i + 1)) - out.B[n] - rc.alpha(i + 2) * out.B[n + 1]) /
                        g(i + 2));
        out.A_shifted.push_back(
            (times_shifted_x(out.A(static_cast<long>(n)), rc.beta(i + 1)) - out.F[n] - rc.alpha(i + 2) * out.F[n + 1]) /
            g(i + 2));
    }
    return out;
}

Report check_dual_identities(const RecurrenceCoeffs& rc, std::span<const MomentForm> duals, std::size_t M) {
    Report report;
    const Polynomial x = Polynomial::x();
    for (std::size_t n = 0; n + 2 < duals.size(); ++n) {
        if (n >= rc.gamma_list.size() || n >= rc.alpha_list.size() || n >= rc.beta_list.size()) break;
        MomentForm rhs = rc.beta(n) * duals[n] + rc.alpha(n + 1) * duals[n + 1] + rc.gamma(n + 1) * duals[n + 2];
        if (n > 0) rhs = duals[n - 1] + rhs;
        report.add(compare_forms("Eq-functional-2orto", static_cast<long>(n), x * duals[n], rhs, M));
    }

    if (duals.size() >= 6 && rc.gamma_list.size() >= 4 && rc.alpha_list.size() >= 4 && rc.beta_list.size() >= 4) {
        const EABF p = eabf_polys(rc, 2);
        for (std::size_t n = 1; n <= 2; ++n) {
            const MomentForm even = p.E[n] * duals[0] + p.A(static_cast<long>(n) - 1) * duals[1];
            const MomentForm odd = p.B[n] * duals[0] + p.F[n] * duals[1];
            report.add(compare_forms("Eq-u" + std::to_string(2 * n), static_cast<long>(n), duals[2 * n], even, M));
            report.add(compare_forms("Eq-u" + std::to_string(2 * n + 1), static_cast<long>(n), duals[2 * n + 1], odd, M));
        }
    }
    return report;
}

Report orthogonality_check(const MPSPrefix& P, const DualPair& duals, std::size_t m_max) {
    Report report;
    const MomentForm* u[2] = {&duals.u0, &duals.u1};
    for (std::size_t nu = 0; nu < 2; ++nu) {
        const std::size_t order = u[nu]->order();
        for (std::size_t m = 0; m <= m_max && m < P.size(); ++m) {
            const std::size_t diag = 2 * m + nu;
            if (diag >= P.size() || m + diag > order) break;

            const long idx = static_cast<long>(m);
            const std::string suffix = "-nu" + std::to_string(nu);
            CheckLine reg = compare_values("Eq-d-ortogonal-regular" + suffix, idx, act(*u[nu], P[m] * P[diag]), 0, diag);
            // regularity asks for a nonzero value, so equality with zero is the failure
            reg.passed = !reg.passed;
            if (reg.passed) {
                reg.violation.reset();
            } else {
                reg.violation = Violation{idx, diag, Rational(), Rational()};
            }
            report.add(std::move(reg));

            CheckLine line;
            line.tag = "Eq-d-ortogonal" + suffix;
            line.index = idx;
            line.horizon = diag;
            for (std::size_t n = diag + 1; n < P.size() && m + n <= order; ++n) {
                line.horizon = n;
                const Rational v = act(*u[nu], P[m] * P[n]);
                if (!v.is_zero()) {
                    line.passed = false;
                    line.violation = Violation{idx, n, v, Rational()};
                    break;
                }
            }
            report.add(std::move(line));
        }
    }
    return report;
}

}  // namespace twoorth
