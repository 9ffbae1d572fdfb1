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

#include "twoorth/errors.hpp"

#include <utility>

namespace twoorth {

OrderExceeded::OrderExceeded(std::size_t requested, std::size_t available)
    : Error("moment order exceeded: need " + std::to_string(requested) + ", form holds " +
            std::to_string(available)),
      requested_(requested),
      available_(available) {}

ZeroLambda::ZeroLambda(std::size_t index)
    : Error("normalization constant lambda_" + std::to_string(index) + " vanishes"), index_(index) {}

MissingCoefficient::MissingCoefficient(std::string sequence, std::size_t index)
    : Error("missing recurrence coefficient " + sequence + "_" + std::to_string(index)),
      sequence_(std::move(sequence)),
      index_(index) {}

ZeroGamma::ZeroGamma(std::size_t index)
    : Error("gamma_" + std::to_string(index) + " = 0 (regularity)"), index_(index) {}

RepeatedEigenvalue::RepeatedEigenvalue(std::size_t n, std::size_t m)
    : Error("repeated eigenvalue: lambda_" + std::to_string(n) + " = lambda_" + std::to_string(m)),
      n_(n),
      m_(m) {}

NonInvertible::NonInvertible(std::size_t n)
    : Error("operator is not an isomorphism: lambda_" + std::to_string(n) + " = 0"), n_(n) {}

HypothesisViolated::HypothesisViolated(std::string hypothesis, std::string witness)
    : Error("hypothesis violated: " + hypothesis + " (" + witness + ")"),
      hypothesis_(std::move(hypothesis)),
      witness_(std::move(witness)) {}

ClosedFormMismatch::ClosedFormMismatch(std::string entry, std::string from_definition,
                                       std::string closed_form)
    : Error("closed form mismatch in " + entry + ": definition " + from_definition +
            " vs closed form " + closed_form),
      entry_(std::move(entry)),
      from_definition_(std::move(from_definition)),
      closed_form_(std::move(closed_form)) {}

IdentityViolated::IdentityViolated(std::string tag, long index, std::size_t moment, std::string lhs,
                                   std::string rhs)
    : Error("identity " + tag + " violated at index " + std::to_string(index) + ", moment " +
            std::to_string(moment) + ": " + lhs + " != " + rhs),
      tag_(std::move(tag)),
      index_(index),
      moment_(moment),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

}  // namespace twoorth
