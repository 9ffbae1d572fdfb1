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

#include "twoorth/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "twoorth/eigensolver.hpp"
#include "twoorth/errors.hpp"

namespace twoorth {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::passed:
            return "passed";
        case Outcome::hypotheses_unmet:
            return "hypotheses-unmet";
        case Outcome::violated:
            return "violated";
    }
    return "?";
}

const char* to_string(Suite s) { return s == Suite::theorem4 ? "theorem4" : "theorem5"; }

namespace {

PipelineResult unmet(PipelineResult r, std::string why) {
    r.outcome = Outcome::hypotheses_unmet;
    r.reason = std::move(why);
    return r;
}

void finish(PipelineResult& r) {
    if (const CheckLine* bad = r.report.first_failure()) {
        r.outcome = Outcome::violated;
        r.reason = bad->tag + " fails at index " + std::to_string(bad->index);
        if (bad->violation) r.reason += ", moment " + std::to_string(bad->violation->moment);
    } else {
        r.outcome = Outcome::passed;
        r.reason.clear();
    }
}

CheckLine flag_line(std::string tag, long index, std::size_t horizon, bool ok, std::string note = {}) {
    CheckLine line;
    line.tag = std::move(tag);
    line.index = index;
    line.horizon = horizon;
    line.passed = ok;
    line.note = std::move(note);
    return line;
}

bool third_order(const DiffOperator& J) {
    const auto k = J.order();
    return J.is_normal_form() && (!k || *k <= 3);
}

// Sets implied beta_0, gamma_1 from a_1 = c_1 x + c_0, c_1 != 0.
bool read_implied(const DiffOperator& J, PipelineResult& r) {
    const Polynomial& a1 = J.a(1);
    if (a1.degree() != Degree(1)) return false;
    r.implied_beta0 = -a1.coeff(0) / a1.coeff(1);
    r.implied_gamma1 = -inverse(Rational(3) * a1.coeff(1));
    return true;
}

struct Solved {
    MPSPrefix P;                 // through moment_order
    RecurrenceCoeffs rc;         // fitted on the whole prefix
    std::vector<MomentForm> duals;
};

// Eigensolves, fits and checks the implied coefficients. Returns nothing and
// marks r as unmet when the instance is outside the theorem's scope.
std::optional<Solved> solve_and_fit(const DiffOperator& J, const PipelineConfig& cfg, PipelineResult& r) {
    const std::size_t top = std::max(cfg.n_max, cfg.moment_order);
    EigenSolution sol;
    try {
        sol = eigen_mps(J, top);
    } catch (const NonInvertible& e) {
        r = unmet(std::move(r), e.what());
        return std::nullopt;
    } catch (const RepeatedEigenvalue& e) {
        r = unmet(std::move(r), e.what());
        return std::nullopt;
    }
    r.lambdas.assign(sol.lambdas.begin(), sol.lambdas.begin() + static_cast<std::ptrdiff_t>(cfg.n_max + 1));

    const MPSPrefix head(sol.P.begin(), sol.P.begin() + static_cast<std::ptrdiff_t>(cfg.n_max + 1));
    FitResult fit = fit_2orth_recurrence(head);
    if (auto* no = std::get_if<NotTwoOrthogonal>(&fit)) {
        r = unmet(std::move(r), "eigen-MPS is not 2-orthogonal: " + no->reason);
        return std::nullopt;
    }
    r.fitted = std::get<RecurrenceCoeffs>(fit);
    if (r.fitted->beta(0) != *r.implied_beta0 || r.fitted->gamma(1) != *r.implied_gamma1) {
        r = unmet(std::move(r), "fitted (beta0, gamma1) = (" + r.fitted->beta(0).to_string() + ", " +
                                    r.fitted->gamma(1).to_string() + ") differ from implied (" +
                                    r.implied_beta0->to_string() + ", " + r.implied_gamma1->to_string() + ")");
        return std::nullopt;
    }

    FitResult full = fit_2orth_recurrence(sol.P);
    if (auto* no = std::get_if<NotTwoOrthogonal>(&full)) {
        r = unmet(std::move(r), "eigen-MPS stops being 2-orthogonal past n_max: " + no->reason);
        return std::nullopt;
    }
    Solved s{std::move(sol.P), std::get<RecurrenceCoeffs>(std::move(full)), {}};
    r.report.add(flag_line("Eq-eigen", 0, top, verify_eigen(J, s.P, sol.lambdas)));
    return s;
}

void common_checks(const DiffOperator& J, const PipelineConfig& cfg, Solved& s, PipelineResult& r) {
    s.duals = dual_sequence(s.P, 8, cfg.moment_order);
    const DualPair dp{s.duals[0], s.duals[1]};
    r.report.merge(check_dual_identities(s.rc, s.duals, cfg.check_order));
    r.report.merge(orthogonality_check(s.P, dp, cfg.moment_order / 3));
    r.report.merge(j_expansion_check(J, s.rc, s.duals, cfg.check_order));
    r.report.merge(lemma_identities_check(J, s.rc, dp, cfg.check_order));
}

void system_checks(const ClassicalSystem& sys, const PipelineConfig& cfg, const Solved& s, PipelineResult& r) {
    const DualPair dp{s.duals[0], s.duals[1]};
    r.report.merge(sys.closed_forms);
    r.report.merge(classical_system_check(sys, dp, cfg.check_order));
    r.report.merge(degree_bounds_check(sys));
    r.system = sys;
}

void hahn_line(const PipelineConfig& cfg, const Solved& s, PipelineResult& r) {
    const std::size_t len = std::min(s.P.size(), cfg.hahn_n + 2);
    r.hahn = hahn_check(MPSPrefix(s.P.begin(), s.P.begin() + static_cast<std::ptrdiff_t>(len)));
    std::string note;
    if (auto* no = std::get_if<NotTwoOrthogonal>(&r.hahn->fit)) note = no->reason;
    r.report.add(flag_line("Hahn-derivative-2orto", 0, len - 2, r.hahn->classical, note));
}

template <class Body>
PipelineResult guarded(Body body) {
    PipelineResult r;
    try {
        body(r);
    } catch (const HypothesisViolated& e) {
        return unmet(std::move(r), e.what());
    } catch (const ClosedFormMismatch& e) {
        r.report.add(flag_line(e.entry(), 0, 0, false, e.what()));
        finish(r);
    } catch (const Error& e) {
        r.outcome = Outcome::violated;
        r.reason = std::string("unexpected error: ") + e.what();
    }
    return r;
}

}  // namespace

PipelineResult run_theorem4(const DiffOperator& J, const PipelineConfig& cfg) {
    return guarded([&](PipelineResult& r) {
        if (!third_order(J)) throw HypothesisViolated("J third order in normal form", "order too high");
        if (!J.a(2).is_zero()) throw HypothesisViolated("a2 = 0", "a2 = " + to_string(J.a(2)));
        if (!read_implied(J, r)) throw HypothesisViolated("deg a1 = 1", "a1 = " + to_string(J.a(1)));
        if (auto m = theorem4_admissibility_witness(J.a(3, 3), *r.implied_gamma1)) {
            throw HypothesisViolated("a3^[3] != 1/(gamma1 (m+1))", "m = " + std::to_string(*m));
        }
        auto s = solve_and_fit(J, cfg, r);
        if (!s) return;

        common_checks(J, cfg, *s, r);
        const Intermediates I = intermediates(J, s->rc);
        r.report.add(compare_polynomials("Eq-p0", 0, I.p0, Rational(-2) * J.a(1)));
        r.report.add(compare_polynomials("Eq-p1=0", 0, I.p1, Polynomial()));
        r.report.add(compare_values("Eq-p1=0-alpha1", 1, s->rc.alpha(1), Rational()));
        if (s->rc.alpha(1).is_zero()) {
            system_checks(phi_theorem4(J, s->rc), cfg, *s, r);
        }
        hahn_line(cfg, *s, r);
        finish(r);
    });
}

PipelineResult run_theorem5(const DiffOperator& J, const Rational& tau, const PipelineConfig& cfg) {
    return guarded([&](PipelineResult& r) {
        if (tau.is_zero()) throw HypothesisViolated("tau != 0", "tau = 0");
        if (!third_order(J)) throw HypothesisViolated("J third order in normal form", "order too high");
        if (J.a(3) != tau * J.a(2)) throw HypothesisViolated("a3 = tau a2", "a3 = " + to_string(J.a(3)));
        if (!J.a(2, 2).is_zero()) throw HypothesisViolated("a2^[2] = 0", "a2^[2] = " + J.a(2, 2).to_string());
        if (!read_implied(J, r)) throw HypothesisViolated("deg a1 = 1", "a1 = " + to_string(J.a(1)));
        auto s = solve_and_fit(J, cfg, r);
        if (!s) return;

        const RecurrenceCoeffs& rc = s->rc;
        const Rational alpha4 = rc.alpha(2) * rc.gamma(3) / rc.gamma(2);
        if (rc.alpha(4) != alpha4) {
            throw HypothesisViolated("alpha4 = alpha2 gamma3/gamma2",
                                     "alpha4 = " + rc.alpha(4).to_string() + ", expected " + alpha4.to_string());
        }
        if (auto m = theorem5_admissibility_witness(J.a(1, 2), tau, rc)) {
            throw HypothesisViolated("a1^[2] != 2 tau/(gamma1 (m+1)) - 2 (beta1 - beta3)/(3 gamma1)",
                                     "m = " + std::to_string(*m));
        }
        common_checks(J, cfg, *s, r);
        system_checks(varpi_theorem5(J, rc, tau), cfg, *s, r);
        hahn_line(cfg, *s, r);
        finish(r);
    });
}

PipelineResult run_identities(const RecurrenceCoeffs& rc, const PipelineConfig& cfg) {
    return guarded([&](PipelineResult& r) {
        if (!rc.regular()) throw HypothesisViolated("gamma_n != 0", "some stored gamma vanishes");
        const std::size_t supported =
            std::min({rc.beta_list.size(), rc.alpha_list.size() + 1, rc.gamma_list.size() + 2});
        const std::size_t L = std::min(supported, cfg.moment_order);
        if (L < 6) throw HypothesisViolated("recurrence through index 5", "supports P_0..P_" + std::to_string(L));

        const MPSPrefix P = generate(rc, L);
        const RecurrenceCoeffs expected = rc.truncated_for(L);
        const FitResult fit = fit_2orth_recurrence(P);
        const bool round_trip = std::holds_alternative<RecurrenceCoeffs>(fit) && std::get<RecurrenceCoeffs>(fit) == expected;
        r.report.add(flag_line("Eq-rr-2orto-roundtrip", 0, L, round_trip));
        r.fitted = expected;

        const std::size_t count = std::min<std::size_t>(L + 1, 8);
        const auto duals = dual_sequence(P, count, L);
        for (std::size_t k = 0; k < count; ++k) {
            CheckLine line = flag_line("Eq-SucDual", static_cast<long>(k), L, true);
            for (std::size_t m = 0; m <= L; ++m) {
                const Rational v = act(duals[k], P[m]);
                const Rational want = k == m ? Rational(1) : Rational();
                if (v != want) {
                    line.passed = false;
                    line.violation = Violation{static_cast<long>(k), m, v, want};
                    break;
                }
            }
            r.report.add(std::move(line));
        }
        r.report.merge(check_dual_identities(rc, duals, std::min(cfg.check_order, L - 1)));
        r.report.merge(orthogonality_check(P, DualPair{duals[0], duals[1]}, L / 3));
        finish(r);
    });
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

class RationalSource {
   public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

    // +-p/q with p, q uniform in [1, 20]
    Rational nonzero() {
        long p = 1 + static_cast<long>(rng_() % 20);
        const long q = 1 + static_cast<long>(rng_() % 20);
        if (rng_() & 1U) p = -p;
        return Rational(p, q);
    }
    bool coin() { return (rng_() & 1U) != 0; }

   private:
    std::mt19937_64 rng_;
};

bool distinct_nonzero(const std::vector<Rational>& lambdas) {
    std::set<Rational> seen;
    for (const auto& l : lambdas) {
        if (l.is_zero() || !seen.insert(l).second) return false;
    }
    return true;
}

constexpr int kMaxTries = 10000;

}  // namespace

Draw sample_draw(Suite suite, std::uint64_t seed, std::size_t index, const PipelineConfig& cfg) {
    Draw d;
    d.index = index;
    d.seed = splitmix64(seed + index);
    RationalSource src(d.seed);
    d.family = src.coin();

    const Rational c1 = src.nonzero();
    const Rational c0 = src.nonzero();
    const Polynomial a1{c0, c1};
    const Rational gamma1 = -inverse(Rational(3) * c1);

    Polynomial a2, a3;
    if (suite == Suite::theorem4) {
        if (d.family) {
            a3 = Polynomial(Rational(1));
        } else {
            for (int t = 0; t < kMaxTries; ++t) {
                a3 = Polynomial{src.nonzero(), src.nonzero(), src.nonzero(), src.nonzero()};
                if (!theorem4_admissibility_witness(a3.coeff(3), gamma1)) break;
            }
        }
    } else {
        d.tau = src.nonzero();
        a2 = d.family ? Polynomial(inverse(*d.tau)) : Polynomial{src.nonzero(), src.nonzero()};
        a3 = *d.tau * a2;
    }

    const std::size_t top = std::max(cfg.n_max, cfg.moment_order);
    for (int t = 0; t < kMaxTries; ++t) {
        d.J = DiffOperator({Polynomial(src.nonzero()), a1, a2, a3});
        if (distinct_nonzero(lambda_seq(d.J, 0, top + 1))) break;
    }
    return d;
}

RecurrenceCoeffs sample_recurrence(std::uint64_t seed, std::size_t n) {
    RationalSource src(splitmix64(seed));
    RecurrenceCoeffs rc;
    for (std::size_t i = 0; i <= n; ++i) {
        rc.beta_list.push_back(src.coin() ? src.nonzero() : Rational());
        rc.alpha_list.push_back(src.coin() ? src.nonzero() : Rational());
        rc.gamma_list.push_back(src.nonzero());
    }
    return rc;
}

SweepSummary run_sweep(Suite suite, std::uint64_t seed, std::size_t draws, const PipelineConfig& cfg,
                       unsigned threads) {
    SweepSummary out;
    out.entries.resize(draws);
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(draws, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < draws; i = next++) {
            SweepEntry e;
            e.draw = sample_draw(suite, seed, i, cfg);
            e.result = suite == Suite::theorem4 ? run_theorem4(e.draw.J, cfg) : run_theorem5(e.draw.J, *e.draw.tau, cfg);
            out.entries[i] = std::move(e);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& e : out.entries) {
        switch (e.result.outcome) {
            case Outcome::passed:
                ++out.passed;
                break;
            case Outcome::hypotheses_unmet:
                ++out.hypotheses_unmet;
                break;
            case Outcome::violated:
                ++out.violated;
                break;
        }
    }
    return out;
}

}  // namespace twoorth
