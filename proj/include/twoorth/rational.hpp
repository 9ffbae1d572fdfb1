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

#ifndef TWOORTH_RATIONAL_HPP
#define TWOORTH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twoorth {

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator.
 *
 * Thin value wrapper over GMP's mpq_class. The wrapper exists so that the
 * rest of the library never sees an unnormalized fraction and so that
 * division by zero is reported as an exception instead of aborting.
 */
class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p" or "p/q" with optional leading sign on p; q must be nonzero.
    static Rational parse(std::string_view text);

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& r) { return Rational(mpq_class(-r.value_)); }
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    mpq_class value_;
};

Rational inverse(const Rational& r);
Rational binomial(unsigned long n, unsigned long k);
Rational factorial(unsigned long n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace twoorth

#endif
