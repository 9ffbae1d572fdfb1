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

#ifndef TWOORTH_JSON_IO_HPP
#define TWOORTH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "twoorth/diff_operator.hpp"
#include "twoorth/eigensolver.hpp"
#include "twoorth/pipeline.hpp"

namespace twoorth {

using Json = nlohmann::json;

// Rationals travel as strings ("3", "-2/7"); a polynomial is the list of its
// coefficients from degree 0 up; an operator is the list of its a_nu.

Json to_json(const Rational& r);
Json to_json(const Polynomial& p);
Json to_json(const DiffOperator& J);
Json to_json(const RecurrenceCoeffs& rc);
Json to_json(const CheckLine& line);
Json to_json(const Report& report);
Json to_json(const ClassicalSystem& sys);
Json to_json(const HahnVerdict& v);
Json to_json(const LoweringClass& c);
Json to_json(const PipelineResult& r);
Json to_json(const Draw& d);

/// `path` names the field in diagnostics, e.g. "operator[2][0]".
Rational rational_from_json(const Json& j, const std::string& path);
Polynomial polynomial_from_json(const Json& j, const std::string& path);
DiffOperator operator_from_json(const Json& j, const std::string& path);
RecurrenceCoeffs recurrence_from_json(const Json& j, const std::string& path);

}  // namespace twoorth

#endif
