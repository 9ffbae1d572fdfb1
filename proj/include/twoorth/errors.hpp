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

#ifndef TWOORTH_ERRORS_HPP
#define TWOORTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoorth {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed rational / polynomial / operator text.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// A truncated moment sequence was asked for a moment it does not hold.
class OrderExceeded : public Error {
   public:
    OrderExceeded(std::size_t requested, std::size_t available);
    std::size_t requested() const noexcept { return requested_; }
    std::size_t available() const noexcept { return available_; }

   private:
    std::size_t requested_;
    std::size_t available_;
};

/// Coefficient list not in the form an operation requires.
class InvalidOperator : public Error {
   public:
    using Error::Error;
};

class ZeroLambda : public Error {
   public:
    explicit ZeroLambda(std::size_t index);
    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

class MissingCoefficient : public Error {
   public:
    MissingCoefficient(std::string sequence, std::size_t index);
    const std::string& sequence() const noexcept { return sequence_; }
    std::size_t index() const noexcept { return index_; }

   private:
    std::string sequence_;
    std::size_t index_;
};

class ZeroGamma : public Error {
   public:
    explicit ZeroGamma(std::size_t index);
    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

class RepeatedEigenvalue : public Error {
   public:
    RepeatedEigenvalue(std::size_t n, std::size_t m);
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

   private:
    std::size_t n_;
    std::size_t m_;
};

class NonInvertible : public Error {
   public:
    explicit NonInvertible(std::size_t n);
    std::size_t n() const noexcept { return n_; }

   private:
    std::size_t n_;
};

/// A theorem hypothesis does not hold for the supplied instance.
class HypothesisViolated : public Error {
   public:
    HypothesisViolated(std::string hypothesis, std::string witness);
    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& witness() const noexcept { return witness_; }

   private:
    std::string hypothesis_;
    std::string witness_;
};

/// A printed closed form disagrees with the construction it abbreviates.
class ClosedFormMismatch : public Error {
   public:
    ClosedFormMismatch(std::string entry, std::string from_definition, std::string closed_form);
    const std::string& entry() const noexcept { return entry_; }
    const std::string& from_definition() const noexcept { return from_definition_; }
    const std::string& closed_form() const noexcept { return closed_form_; }

   private:
    std::string entry_;
    std::string from_definition_;
    std::string closed_form_;
};

class IdentityViolated : public Error {
   public:
    IdentityViolated(std::string tag, long index, std::size_t moment, std::string lhs, std::string rhs);
    const std::string& tag() const noexcept { return tag_; }
    long index() const noexcept { return index_; }
    std::size_t moment() const noexcept { return moment_; }
    const std::string& lhs() const noexcept { return lhs_; }
    const std::string& rhs() const noexcept { return rhs_; }

   private:
    std::string tag_;
    long index_;
    std::size_t moment_;
    std::string lhs_;
    std::string rhs_;
};

}  // namespace twoorth

#endif
