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

#ifndef TWOORTH_PIPELINE_HPP
#define TWOORTH_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoorth/diff_operator.hpp"
#include "twoorth/hahn.hpp"
#include "twoorth/report.hpp"
#include "twoorth/two_orth.hpp"

namespace twoorth {

enum class Outcome { passed, hypotheses_unmet, violated };

const char* to_string(Outcome o);

struct PipelineConfig {
    std::size_t n_max = 12;         // eigensolve + fit horizon deciding the scope
    std::size_t moment_order = 40;  // dual moments
    std::size_t check_order = 24;   // identities compared on moments 0..check_order
    std::size_t hahn_n = 10;        // derivative sequence checked through Q_hahn_n
};

struct PipelineResult {
    Outcome outcome = Outcome::passed;
    std::string reason;  // empty when passed

    std::optional<Rational> implied_beta0;
    std::optional<Rational> implied_gamma1;
    std::vector<Rational> lambdas;
    std::optional<RecurrenceCoeffs> fitted;  // through n_max
    std::optional<ClassicalSystem> system;
    std::optional<HahnVerdict> hahn;
    Report report;
};

/// Full check of the a_2 = 0 theorem on one operator. Instances whose
/// eigen-MPS is not 2-orthogonal, or whose fitted (beta_0, gamma_1) differ
/// from the values implied by a_1, come back as hypotheses_unmet.
PipelineResult run_theorem4(const DiffOperator& J, const PipelineConfig& cfg = {});

/// Same for a_3 = tau a_2; alpha_4 = alpha_2 gamma_3 / gamma_2 and the
/// a_1^[2] bound are read off the fitted coefficients.
PipelineResult run_theorem5(const DiffOperator& J, const Rational& tau, const PipelineConfig& cfg = {});

/// Recurrence-level checks: round trip, biorthogonality, functional
/// recurrence, u_2..u_5 decompositions and 2-orthogonality of the duals.
PipelineResult run_identities(const RecurrenceCoeffs& rc, const PipelineConfig& cfg = {});

enum class Suite { theorem4, theorem5 };

const char* to_string(Suite s);

/// One sampled instance. `family` is true when the draw was taken from the
/// branch known to admit a 2-orthogonal eigen-MPS.
struct Draw {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool family = false;
    DiffOperator J;
    std::optional<Rational> tau;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic for a given (suite, seed, index, cfg).
Draw sample_draw(Suite suite, std::uint64_t seed, std::size_t index, const PipelineConfig& cfg = {});

/// Random regular recurrence coefficients through index n.
RecurrenceCoeffs sample_recurrence(std::uint64_t seed, std::size_t n);

struct SweepEntry {
    Draw draw;
    PipelineResult result;
};

struct SweepSummary {
    std::size_t passed = 0;
    std::size_t hypotheses_unmet = 0;
    std::size_t violated = 0;
    std::vector<SweepEntry> entries;  // ordered by draw index
};

/// Runs `draws` instances on up to `threads` workers (0 = hardware).
SweepSummary run_sweep(Suite suite, std::uint64_t seed, std::size_t draws, const PipelineConfig& cfg = {},
                       unsigned threads = 0);

}  // namespace twoorth

#endif
