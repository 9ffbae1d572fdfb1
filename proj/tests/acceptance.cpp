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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "generators.hpp"
#include "hahn_oracle.hpp"
#include "twoorth/cli.hpp"
#include "twoorth/errors.hpp"
#include "twoorth/hahn.hpp"
#include "twoorth/pipeline.hpp"

using namespace twoorth;
using namespace twoorth::testing;

namespace {

struct Verdict {
    bool passed = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (passed) detail << "first failure: " << why << "; ";
        passed = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

using Clock = std::chrono::steady_clock;

bool run(const char* id, const char* title, double limit_seconds, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = Clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        v.fail("runtime " + std::to_string(secs) + " s over the " + std::to_string(limit_seconds) + " s limit");
    }
    std::printf("%s %s  %s  [%.2f s] %s\n", id, v.passed ? "PASS" : "FAIL", title, secs, v.detail.str().c_str());
    std::fflush(stdout);
    return v.passed;
}

// ---------------------------------------------------------------- AC1

void operator_calculus(Verdict& v) {
    Gen g(1001);
    std::size_t dual = 0, fg = 0, fu = 0, transport = 0;

    for (int i = 0; i < 120; ++i, ++dual) {
        const DiffOperator J = g.op(3);
        const MomentForm u = g.form(20);
        const Polynomial f = g.poly(14);
        v.expect(act(transpose_apply(J, u), f) == act(u, apply(J, f)), "duality draw " + std::to_string(i));
    }

    for (int i = 0; i < 120; ++i, ++fg) {
        const DiffOperator J = g.op(3);
        const Polynomial f = g.poly(6), h = g.poly(6);
        Polynomial fh, hf;
        for (std::size_t n = 0; n <= 3; ++n) {
            fh += apply(shifted(J, n), f) * derivative(h, n) / factorial(n);
            hf += apply(shifted(J, n), h) * derivative(f, n) / factorial(n);
        }
        const Polynomial lhs = apply(J, f * h);
        v.expect(lhs == fh && lhs == hf, "J(fg) draw " + std::to_string(i));
    }

    for (int i = 0; i < 120; ++i, ++fu) {
        const DiffOperator J = g.op(3);
        const Polynomial f = g.poly(3);
        const MomentForm u = g.form(24);
        const MomentForm lhs = transpose_apply(J, left_mul(f, u));
        const MomentForm rhs = left_mul(f, transpose_apply(J, u)) -
                               left_mul(derivative(f), transpose_apply(shifted(J, 1), u)) +
                               left_mul(derivative(f, 2) / Rational(2), transpose_apply(shifted(J, 2), u)) -
                               left_mul(derivative(f, 3) / Rational(6), transpose_apply(shifted(J, 3), u));
        v.expect(equal_up_to(lhs, rhs, std::min(lhs.order(), rhs.order())), "J(fu) draw " + std::to_string(i));
    }

    const std::size_t N = 14;
    while (transport < 100) {
        const std::size_t k = static_cast<std::size_t>(g.integer(0, 2));
        const DiffOperator J = g.lowering_op(k, 3);
        if (!classify_order(J, N + k).classifiable()) continue;
        const MPSPrefix P = g.mps(N + k + 2);
        const MPSPrefix Pt = jimage_mps(J, P, k);
        for (std::size_t n = 0; n <= 8; ++n) {
            const MomentForm img = transpose_apply(J, dual_moments(Pt, n, N));
            for (std::size_t m = 0; m <= 8; ++m) {
                const Rational expect = (m == n + k) ? lambda(J, k, n) : Rational();
                v.expect(act(img, P[m]) == expect, "transport draw " + std::to_string(transport));
            }
        }
        ++transport;
    }
    v.detail << "duality " << dual << ", J(fg) " << fg << ", J(fu) " << fu << ", transport " << transport
             << " instances";
}

// ---------------------------------------------------------------- AC2

void lambda_cross_check(Verdict& v) {
    Gen g(1002);
    std::size_t ops = 0;
    for (int i = 0; i < 60; ++i, ++ops) {
        const DiffOperator J = g.op(3);
        v.expect(lambda(J, 0, 0) == J.a(0, 0), "lambda_0");
        v.expect(lambda(J, 0, 1) == J.a(0, 0) + J.a(1, 1), "lambda_1");
        v.expect(lambda(J, 0, 2) == J.a(0, 0) + Rational(2) * J.a(1, 1) + J.a(2, 2), "lambda_2");
        for (std::size_t n = 0; n <= 12; ++n) {
            const Polynomial img = apply(J, Polynomial::monomial(n));
            v.expect(img.coeff(n) == lambda(J, 0, n), "leading coefficient at n = " + std::to_string(n));
            v.expect(img.degree().at_most(n), "degree raised at n = " + std::to_string(n));
        }
    }
    for (int i = 0; i < 30; ++i, ++ops) {
        const std::size_t k = static_cast<std::size_t>(g.integer(1, 2));
        const DiffOperator J = g.lowering_op(k, 3 + k);
        for (std::size_t n = 0; n + k <= 12; ++n) {
            const Polynomial img = apply(J, Polynomial::monomial(n + k));
            v.expect(img.coeff(n) == lambda(J, k, n) && img.degree().at_most(n), "lowering order " + std::to_string(k));
        }
    }
    v.detail << ops << " operators, n <= 12";
}

// ---------------------------------------------------------------- AC3

void two_orthogonality(Verdict& v) {
    Gen g(1003);
    const std::size_t order = 40;
    std::size_t draws = 0;
    for (int i = 0; i < 50; ++i, ++draws) {
        const RecurrenceCoeffs rc = g.recurrence(order + 2);
        const std::size_t n = static_cast<std::size_t>(g.integer(4, 14));
        const RecurrenceCoeffs head = rc.truncated_for(n);
        const FitResult fit = fit_2orth_recurrence(generate(head, n));
        v.expect(std::holds_alternative<RecurrenceCoeffs>(fit) && std::get<RecurrenceCoeffs>(fit) == head,
                 "round trip draw " + std::to_string(i));

        const MPSPrefix P = generate(rc, order);
        const auto duals = dual_sequence(P, 8, order);
        for (std::size_t k = 0; k < duals.size(); ++k)
            for (std::size_t m = 0; m <= order; ++m)
                v.expect(act(duals[k], P[m]) == (k == m ? Rational(1) : Rational()), "biorthogonality");

        const std::size_t M = order - 2;
        for (std::size_t j = 0; j + 2 < duals.size(); ++j) {
            MomentForm rhs = rc.beta(j) * duals[j] + rc.alpha(j + 1) * duals[j + 1] + rc.gamma(j + 1) * duals[j + 2];
            if (j > 0) rhs = rhs + duals[j - 1];
            v.expect(equal_up_to(left_mul(Polynomial::x(), duals[j]), rhs, M - 1), "functional recurrence");
        }
        const EABF e = eabf_polys(rc, 2);
        for (std::size_t j = 1; j <= 2; ++j) {
            const MomentForm even = left_mul(e.E[j], duals[0]) + left_mul(e.A(static_cast<long>(j) - 1), duals[1]);
            const MomentForm odd = left_mul(e.B[j], duals[0]) + left_mul(e.F[j], duals[1]);
            v.expect(equal_up_to(even, duals[2 * j], M), "u_" + std::to_string(2 * j));
            v.expect(equal_up_to(odd, duals[2 * j + 1], M), "u_" + std::to_string(2 * j + 1));
        }
        v.expect(check_dual_identities(rc, duals, M).all_passed(), "library dual identity report");
    }
    v.detail << draws << " recurrences, round trip n in [4, 14], moments to order " << order;
}

// ---------------------------------------------------------------- AC4

void closed_forms(Verdict& v) {
    Gen g(1004);
    std::size_t t4 = 0, t5 = 0;
    for (int i = 0; i < 10; ++i, ++t4) {
        RecurrenceCoeffs rc = g.recurrence(6);
        rc.alpha_list[0] = Rational();
        const DiffOperator J = theorem4_operator(g, rc);
        const ClassicalSystem sys = phi_theorem4(J, rc);
        v.expect(sys.closed_forms.lines().size() == 4 && sys.closed_forms.all_passed(), "phi closed forms");
        const auto closed = phi_closed_forms(rc, J.a(3, 3));
        const auto oracle = oracle_phi(J, rc);
        for (std::size_t k = 0; k < 4; ++k) v.expect(closed[k] == oracle[k], "phi entry " + std::to_string(k));
    }
    for (int i = 0; i < 10; ++i, ++t5) {
        const RecurrenceCoeffs rc = theorem5_recurrence(g);
        const Rational tau = g.nonzero();
        const DiffOperator J = theorem5_operator(g, rc, tau);
        const ClassicalSystem sys = varpi_theorem5(J, rc, tau);
        v.expect(sys.closed_forms.lines().size() == 4 && sys.closed_forms.all_passed(), "varpi closed forms");
        const auto closed = varpi_closed_forms(rc, tau, J.a(0, 2), J.a(1, 2));
        const auto oracle = oracle_varpi(J, rc, tau);
        for (std::size_t k = 0; k < 4; ++k) v.expect(closed[k] == oracle[k], "varpi entry " + std::to_string(k));
    }
    v.detail << "phi at " << t4 << " points, varpi at " << t5 << " points";
}

// ---------------------------------------------------------------- AC5 / AC6 / AC7

constexpr std::uint64_t kSeed = 20261018;
constexpr std::size_t kDraws = 20;

std::string sweep_report(Suite suite, unsigned threads) {
    RunConfig cfg;
    cfg.mode = Mode::sweep;
    cfg.suite = suite;
    cfg.seed = kSeed;
    cfg.draws = kDraws;
    cfg.threads = threads;
    return dump_report(cmd_sweep(cfg).report);
}

void end_to_end(Verdict& v, Suite suite, const std::set<std::string>& required) {
    const PipelineConfig cfg;
    const SweepSummary s = run_sweep(suite, kSeed, kDraws, cfg);
    v.expect(s.entries.size() == kDraws, "draw count");
    v.expect(s.violated == 0, std::to_string(s.violated) + " violated draws");
    v.expect(s.passed > 0, "no draw reached the checks");
    for (const auto& e : s.entries) {
        if (e.result.outcome != Outcome::passed) continue;
        std::set<std::string> seen;
        for (const auto& l : e.result.report.lines()) seen.insert(l.tag);
        for (const auto& tag : required)
            v.expect(seen.count(tag) == 1, "draw " + std::to_string(e.draw.index) + " lacks " + tag);
        v.expect(e.result.hahn && e.result.hahn->classical, "hahn verdict");
    }
    v.detail << "seed " << kSeed << ": " << s.passed << " passed, " << s.hypotheses_unmet << " hypotheses-unmet, "
             << s.violated << " violated of " << kDraws << " (unmet rate " << s.hypotheses_unmet << "/" << kDraws
             << ")";
}

const std::set<std::string> kCommonTags = {
    "Eq-eigen", "Eq-7.1", "Eq-7.2", "Eq-8.1", "Eq-8.2", "Eq-9.1", "Eq-9.2", "Eq-9.3", "Eq-9.4", "Eq-Da2u0",
    "Eq-Da2u1", "Eq-Dcomplete", "Eq-EqClassic-1", "Eq-EqClassic-2", "Hahn-derivative-2orto"};

std::set<std::string> with(std::set<std::string> base, std::initializer_list<const char*> more) {
    for (const char* t : more) base.insert(t);
    return base;
}

void determinism(Verdict& v) {
    for (Suite suite : {Suite::theorem4, Suite::theorem5}) {
        const std::string a = sweep_report(suite, 1);
        const std::string b = sweep_report(suite, 4);
        const std::string c = sweep_report(suite, 0);
        v.expect(a == b && b == c, std::string(to_string(suite)) + " reports differ");
        v.detail << to_string(suite) << " " << a.size() << " bytes x3; ";
    }
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run("AC1", "operator calculus", 30, operator_calculus);
    ok &= run("AC2", "lambda cross-check", 0, lambda_cross_check);
    ok &= run("AC3", "two-orthogonality round trip", 120, two_orthogonality);
    ok &= run("AC4", "closed-form identities", 0, closed_forms);
    ok &= run("AC5", "end-to-end a2 = 0", 300, [](Verdict& v) {
        end_to_end(v, Suite::theorem4, with(kCommonTags, {"Eq-p0", "Eq-p1=0", "Eq-p1=0-alpha1", "Eq-phi-1,1",
                                                          "Eq-phi-1,2", "Eq-phi-2,1", "Eq-phi-2,2"}));
    });
    ok &= run("AC6", "end-to-end a3 = tau a2", 300, [](Verdict& v) {
        end_to_end(v, Suite::theorem5, with(kCommonTags, {"Table-1-varpi11", "Table-1-varpi12", "Table-1-varpi21",
                                                          "Table-1-varpi22"}));
    });
    ok &= run("AC7", "sweep determinism", 0, determinism);
    std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
    return ok ? 0 : 1;
}
