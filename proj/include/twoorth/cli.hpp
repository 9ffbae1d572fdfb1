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

#ifndef TWOORTH_CLI_HPP
#define TWOORTH_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twoorth/json_io.hpp"

namespace twoorth {

enum class Mode { classify, eigensolve, verify_theorem4, verify_theorem5, verify_identities, hahn, sweep };

const char* to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

struct RunConfig {
    Mode mode = Mode::classify;
    std::optional<DiffOperator> op;
    std::optional<RecurrenceCoeffs> recurrence;
    std::optional<Rational> tau;
    Suite suite = Suite::theorem4;
    std::size_t n_max = 12;
    std::size_t moment_order = 40;
    std::size_t check_order = 24;
    std::uint64_t seed = 0;
    std::size_t draws = 20;
    unsigned threads = 0;

    PipelineConfig pipeline() const { return {n_max, moment_order, check_order, 10}; }
};

/// Parses a config document. Syntax errors report line and column; field
/// errors report the offending key. Throws ParseError.
RunConfig config_from_text(std::string_view text);

/// Throws ParseError when mode-required inputs are missing or the orders
/// are inconsistent (n_max >= 4, check_order <= moment_order - 12).
void validate(const RunConfig& cfg);

/// Full structured report and the process exit code that goes with it.
struct RunOutput {
    Json report;
    int exit_code = 0;
    std::string verdict;  // one line for standard output
};

RunOutput cmd_run(const RunConfig& cfg);
RunOutput cmd_sweep(const RunConfig& cfg);

/// Deterministic text form of a report.
std::string dump_report(const Json& report);

}  // namespace twoorth

#endif
