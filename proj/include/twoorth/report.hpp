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

#ifndef TWOORTH_REPORT_HPP
#define TWOORTH_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twoorth/moment_form.hpp"
#include "twoorth/polynomial.hpp"
#include "twoorth/rational.hpp"

namespace twoorth {

/// Where and how an identity failed.
struct Violation {
    long index = 0;          // sequence index the identity is instantiated at (n, m, ...)
    std::size_t moment = 0;  // first moment (or degree) that differs
    Rational lhs;
    Rational rhs;
};

/// One verified (or refuted) identity. `tag` names the equation, `horizon`
/// the largest moment index or degree that was compared.
struct CheckLine {
    std::string tag;
    long index = 0;
    std::size_t horizon = 0;
    bool passed = true;
    std::optional<Violation> violation;
    std::string note;
};

class Report {
   public:
    void add(CheckLine line) { lines_.push_back(std::move(line)); }
    void merge(const Report& other);

    const std::vector<CheckLine>& lines() const { return lines_; }
    bool all_passed() const;
    std::size_t failures() const;
    /// First failing line, if any.
    const CheckLine* first_failure() const;

    /// Throws IdentityViolated for the first failing line.
    void require() const;

   private:
    std::vector<CheckLine> lines_;
};

/**
 * Compares two forms moment by moment on 0..through. The comparison is
 * clamped to the orders both forms can vouch for; the clamped horizon is
 * what the line reports.
 */
CheckLine compare_forms(std::string tag, long index, const MomentForm& lhs, const MomentForm& rhs,
                        std::size_t through);

/// Scalar identity lhs == rhs.
CheckLine compare_values(std::string tag, long index, const Rational& lhs, const Rational& rhs,
                         std::size_t horizon = 0);

/// Polynomial identity; the violation records the first differing degree.
CheckLine compare_polynomials(std::string tag, long index, const Polynomial& lhs, const Polynomial& rhs);

/// deg p <= bound.
CheckLine degree_at_most(std::string tag, long index, const Polynomial& p, std::size_t bound);

}  // namespace twoorth

#endif
