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

#include "twoorth/report.hpp"

#include <algorithm>

#include "twoorth/errors.hpp"

namespace twoorth {

void Report::merge(const Report& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

bool Report::all_passed() const {
    return std::all_of(lines_.begin(), lines_.end(), [](const CheckLine& l) { return l.passed; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(lines_.begin(), lines_.end(), [](const CheckLine& l) { return !l.passed; }));
}

const CheckLine* Report::first_failure() const {
    for (const auto& l : lines_) {
        if (!l.passed) return &l;
    }
    return nullptr;
}

void Report::require() const {
    const CheckLine* bad = first_failure();
    if (bad == nullptr) return;
    if (bad->violation) {
        throw IdentityViolated(bad->tag, bad->violation->index, bad->violation->moment,
                               bad->violation->lhs.to_string(), bad->violation->rhs.to_string());
    }
    throw IdentityViolated(bad->tag, bad->index, 0, bad->note, "");
}

CheckLine compare_forms(std::string tag, long index, const MomentForm& lhs, const MomentForm& rhs,
                        std::size_t through) {
    CheckLine line;
    line.tag = std::move(tag);
    line.index = index;
    line.horizon = std::min({through, lhs.order(), rhs.order()});
    if (line.horizon < through) {
        line.note = "clamped from " + std::to_string(through);
    }
    if (auto n = first_mismatch(lhs, rhs, line.horizon)) {
        line.passed = false;
        line.violation = Violation{index, *n, lhs.moments()[*n], rhs.moments()[*n]};
    }
    return line;
}

CheckLine compare_values(std::string tag, long index, const Rational& lhs, const Rational& rhs,
                         std::size_t horizon) {
    CheckLine line;
    line.tag = std::move(tag);
    line.index = index;
    line.horizon = horizon;
    if (lhs != rhs) {
        line.passed = false;
        line.violation = Violation{index, horizon, lhs, rhs};
    }
    return line;
}

CheckLine compare_polynomials(std::string tag, long index, const Polynomial& lhs, const Polynomial& rhs) {
    CheckLine line;
    line.tag = std::move(tag);
    line.index = index;
    line.horizon = std::max(lhs.size(), rhs.size());
    if (line.horizon > 0) --line.horizon;
    for (std::size_t i = 0; i <= line.horizon; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            line.passed = false;
            line.violation = Violation{index, i, lhs.coeff(i), rhs.coeff(i)};
            break;
        }
    }
    return line;
}

CheckLine degree_at_most(std::string tag, long index, const Polynomial& p, std::size_t bound) {
    CheckLine line;
    line.tag = std::move(tag);
    line.index = index;
    line.horizon = bound;
    if (!p.degree().at_most(bound)) {
        const std::size_t d = p.degree().value();
        line.passed = false;
        line.violation = Violation{index, d, p.coeff(d), Rational()};
        line.note = "degree " + std::to_string(d) + " exceeds " + std::to_string(bound);
    }
    return line;
}

}  // namespace twoorth
