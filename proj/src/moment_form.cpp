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

#include "twoorth/moment_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "twoorth/errors.hpp"

namespace twoorth {

MomentForm::MomentForm(std::vector<Rational> moments) : moments_(std::move(moments)) {
    if (moments_.empty()) throw std::invalid_argument("a moment form needs at least (u)_0");
}

MomentForm MomentForm::zero(std::size_t order) { return MomentForm(std::vector<Rational>(order + 1)); }

const Rational& MomentForm::moment(std::size_t n) const {
    if (n > order()) throw OrderExceeded(n, order());
    return moments_[n];
}

MomentForm MomentForm::truncated(std::size_t new_order) const {
    if (new_order > order()) throw OrderExceeded(new_order, order());
    return MomentForm(std::vector<Rational>(moments_.begin(), moments_.begin() + new_order + 1));
}

Rational act(const MomentForm& u, const Polynomial& p) {
    if (p.is_zero()) return {};
    const std::size_t deg = p.degree().value();
    if (deg > u.order()) throw OrderExceeded(deg, u.order());
    Rational acc;
    const auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) acc += c[i] * u.moments()[i];
    }
    return acc;
}

MomentForm left_mul(const Polynomial& f, const MomentForm& u) {
    if (f.is_zero()) return MomentForm::zero(u.order());
    const std::size_t deg = f.degree().value();
    if (deg > u.order()) throw OrderExceeded(deg, u.order());
    const auto m = u.moments();
    const auto c = f.coefficients();
    std::vector<Rational> out(u.order() - deg + 1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_zero()) out[n] += c[i] * m[n + i];
        }
    }
    return MomentForm(std::move(out));
}

MomentForm derive_form(const MomentForm& u) {
    const auto m = u.moments();
    std::vector<Rational> out(m.size());
    for (std::size_t n = 1; n < m.size(); ++n) out[n] = -(Rational(static_cast<long>(n)) * m[n - 1]);
    return MomentForm(std::move(out));
}

std::optional<std::size_t> first_mismatch(const MomentForm& u, const MomentForm& v, std::size_t through) {
    const std::size_t available = std::min(u.order(), v.order());
    if (through > available) throw OrderExceeded(through, available);
    for (std::size_t n = 0; n <= through; ++n) {
        if (u.moments()[n] != v.moments()[n]) return n;
    }
    return std::nullopt;
}

bool equal_up_to(const MomentForm& u, const MomentForm& v, std::size_t through) {
    return !first_mismatch(u, v, through).has_value();
}

MomentForm operator+(const MomentForm& u, const MomentForm& v) {
    const std::size_t order = std::min(u.order(), v.order());
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out[n] = u.moments()[n] + v.moments()[n];
    return MomentForm(std::move(out));
}

MomentForm operator-(const MomentForm& u, const MomentForm& v) {
    const std::size_t order = std::min(u.order(), v.order());
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out[n] = u.moments()[n] - v.moments()[n];
    return MomentForm(std::move(out));
}

MomentForm operator-(const MomentForm& u) { return Rational(-1) * u; }

MomentForm operator*(const Rational& c, const MomentForm& u) {
    std::vector<Rational> out(u.moments().begin(), u.moments().end());
    for (auto& m : out) m *= c;
    return MomentForm(std::move(out));
}

}  // namespace twoorth
