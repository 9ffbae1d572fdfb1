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

#include "twoorth/json_io.hpp"

#include "twoorth/errors.hpp"

namespace twoorth {

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_json(r));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

Json to_json(const DiffOperator& J) {
    Json out = Json::array();
    for (const auto& a : J.coefficients()) out.push_back(to_json(a));
    return out;
}

Json to_json(const RecurrenceCoeffs& rc) {
    return {{"beta", rationals(rc.beta_list)}, {"alpha", rationals(rc.alpha_list)}, {"gamma", rationals(rc.gamma_list)}};
}

Json to_json(const CheckLine& line) {
    Json out{{"tag", line.tag}, {"index", line.index}, {"horizon", line.horizon}, {"passed", line.passed}};
    if (!line.note.empty()) out["note"] = line.note;
    if (line.violation) {
        out["violation"] = {{"index", line.violation->index},
                            {"moment", line.violation->moment},
                            {"lhs", to_json(line.violation->lhs)},
                            {"rhs", to_json(line.violation->rhs)}};
    }
    return out;
}

Json to_json(const Report& report) {
    Json out = Json::array();
    for (const auto& l : report.lines()) out.push_back(to_json(l));
    return out;
}

Json to_json(const ClassicalSystem& sys) {
    auto matrix = [](const std::array<std::array<Polynomial, 2>, 2>& m) {
        return Json::array({Json::array({to_json(m[0][0]), to_json(m[0][1])}),
                            Json::array({to_json(m[1][0]), to_json(m[1][1])})});
    };
    return {{"phi", matrix(sys.phi)}, {"psi", matrix(sys.psi)}};
}

Json to_json(const HahnVerdict& v) {
    Json out{{"classical", v.classical}};
    if (const auto* rc = std::get_if<RecurrenceCoeffs>(&v.fit)) {
        out["derivative_recurrence"] = to_json(*rc);
    } else {
        const auto& no = std::get<NotTwoOrthogonal>(v.fit);
        out["witness"] = {{"n", no.n}, {"nu", no.nu}, {"reason", no.reason}};
    }
    return out;
}

Json to_json(const LoweringClass& c) {
    Json out{{"classifiable", c.classifiable()},
             {"candidate_k", c.candidate_k},
             {"horizon", c.horizon},
             {"lambdas", rationals(c.lambdas)}};
    if (c.k) out["k"] = *c.k;
    if (c.failing_n) out["failing_n"] = *c.failing_n;
    return out;
}

Json to_json(const PipelineResult& r) {
    Json out{{"outcome", to_string(r.outcome)}, {"checks", to_json(r.report)}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (r.implied_beta0) out["implied"] = {{"beta0", to_json(*r.implied_beta0)}, {"gamma1", to_json(*r.implied_gamma1)}};
    if (!r.lambdas.empty()) out["lambdas"] = rationals(r.lambdas);
    if (r.fitted) out["fitted_recurrence"] = to_json(*r.fitted);
    if (r.system) out["system"] = to_json(*r.system);
    if (r.hahn) out["hahn"] = to_json(*r.hahn);
    out["summary"] = {{"lines", r.report.lines().size()}, {"failures", r.report.failures()}};
    return out;
}

Json to_json(const Draw& d) {
    Json out{{"index", d.index}, {"seed", d.seed}, {"branch", d.family ? "family" : "generic"}, {"operator", to_json(d.J)}};
    if (d.tau) out["tau"] = to_json(*d.tau);
    return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(path + ": expected a rational string such as \"-3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
    return Polynomial(rationals_from_json(j, path));
}

DiffOperator operator_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of coefficient polynomials");
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < j.size(); ++i) a.push_back(polynomial_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    try {
        return DiffOperator(std::move(a));
    } catch (const InvalidOperator& e) {
        throw ParseError(path + ": " + e.what());
    }
}

RecurrenceCoeffs recurrence_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object with beta, alpha, gamma");
    RecurrenceCoeffs rc;
    for (const char* key : {"beta", "alpha", "gamma"}) {
        if (!j.contains(key)) throw ParseError(path + "." + key + ": missing");
    }
    rc.beta_list = rationals_from_json(j["beta"], path + ".beta");
    rc.alpha_list = rationals_from_json(j["alpha"], path + ".alpha");
    rc.gamma_list = rationals_from_json(j["gamma"], path + ".gamma");
    return rc;
}

}  // namespace twoorth
