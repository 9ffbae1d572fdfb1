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

#include <doctest.h>

#include <string>

#include "twoorth/cli.hpp"
#include "twoorth/errors.hpp"

using namespace twoorth;

namespace {

std::string parse_error(std::string_view text) {
    try {
        (void)config_from_text(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

// a3 = 1, a2 = 0, a1 = -x/3, a0 = 1/2
const char* kTheorem4 = R"({"mode": "verify-theorem4",
  "operator": [["1/2"], ["0", "-1/3"], [], ["1"]]})";

}  // namespace

TEST_CASE("modes round trip through their names") {
    for (Mode m : {Mode::classify, Mode::eigensolve, Mode::verify_theorem4, Mode::verify_theorem5,
                   Mode::verify_identities, Mode::hahn, Mode::sweep})
        CHECK(mode_from_string(to_string(m)) == m);
    CHECK_FALSE(mode_from_string("verify"));
}

TEST_CASE("config parsing") {
    const RunConfig c = config_from_text(R"({"mode": "sweep", "suite": "theorem5", "seed": 9, "draws": 3})");
    CHECK(c.mode == Mode::sweep);
    CHECK(c.suite == Suite::theorem5);
    CHECK(c.seed == 9);
    CHECK(c.draws == 3);
    CHECK(c.n_max == 12);
    CHECK(c.moment_order == 40);
    CHECK(c.check_order == 24);

    const RunConfig t = config_from_text(R"({"mode": "verify-theorem5", "tau": "-4/6", "operator": [[1]]})");
    REQUIRE(t.tau);
    CHECK(*t.tau == Rational(-2, 3));
}

TEST_CASE("config diagnostics name the line or field") {
    CHECK(contains(parse_error("{\n  \"mode\": \"classify\",\n  oops\n}"), "line 3"));
    CHECK(contains(parse_error(R"({"mode": "classify", "operator": [["1"], ["2/0"]]})"), "config.operator[1][0]"));
    CHECK(contains(parse_error(R"({"mode": "classify", "operator": [["1"], ["0", "x"]]})"), "config.operator[1][1]"));
    CHECK(contains(parse_error(R"({"mode": "classify", "operator": [["0", "1"]]})"), "config.operator"));
    CHECK(contains(parse_error(R"({"mode": "classify", "colour": 1})"), "config.colour"));
    CHECK(contains(parse_error(R"({"mode": "nope"})"), "config.mode"));
    CHECK(contains(parse_error(R"({"recurrence": {"beta": [], "alpha": []}})"), "config.recurrence.gamma"));
    CHECK(contains(parse_error(R"({"n_max": -1})"), "n_max"));
    CHECK(contains(parse_error("[1, 2]"), "top level"));
}

TEST_CASE("validation") {
    RunConfig c;
    CHECK_THROWS_AS(validate(c), ParseError);  // classify without operator
    c.op = DiffOperator::derivative();
    CHECK_NOTHROW(validate(c));
    c.n_max = 3;
    CHECK_THROWS_AS(validate(c), ParseError);
    c.n_max = 12;
    c.check_order = 30;
    CHECK_THROWS_AS(validate(c), ParseError);
    c.check_order = 24;
    c.mode = Mode::verify_theorem5;
    CHECK_THROWS_AS(validate(c), ParseError);
    c.mode = Mode::sweep;
    c.draws = 0;
    CHECK_THROWS_AS(validate(c), ParseError);
}

TEST_CASE("classify D") {
    const RunOutput out = cmd_run(config_from_text(R"({"mode": "classify", "operator": [[], ["1"]]})"));
    CHECK(out.exit_code == 0);
    const Json& c = out.report["classification"];
    CHECK(c["k"] == 1);
    for (std::size_t n = 0; n < 5; ++n) CHECK(c["lambdas"][n] == std::to_string(n + 1));
}

TEST_CASE("classify reports a vanishing lambda") {
    const RunOutput out = cmd_run(config_from_text(R"({"mode": "classify", "operator": [["1"], ["0", "-1/2"]]})"));
    CHECK(out.exit_code == 2);
    CHECK(out.report["classification"]["failing_n"] == 2);
}

TEST_CASE("eigensolve exit codes") {
    CHECK(cmd_run(config_from_text(R"({"mode": "eigensolve", "operator": [["1"], ["0", "1"]]})")).exit_code == 0);
    CHECK(cmd_run(config_from_text(R"({"mode": "eigensolve", "operator": [["1"]]})")).exit_code == 2);
}

TEST_CASE("verify-theorem4 on an admissible operator") {
    const RunOutput out = cmd_run(config_from_text(kTheorem4));
    CHECK(out.exit_code == 0);
    const Json& r = out.report["result"];
    CHECK(r["outcome"] == "passed");
    CHECK(r["summary"]["failures"] == 0);
    CHECK(r.contains("fitted_recurrence"));
    CHECK(r.contains("system"));
    CHECK(r["hahn"]["classical"] == true);
    for (const auto& line : r["checks"]) {
        CHECK(line.contains("tag"));
        CHECK(line.contains("horizon"));
    }
}

TEST_CASE("verify-theorem5 with tau = 0 is outside scope") {
    const RunOutput out =
        cmd_run(config_from_text(R"({"mode": "verify-theorem5", "tau": "0", "operator": [["1/2"], ["0", "-1/3"]]})"));
    CHECK(out.exit_code == 2);
    CHECK(out.report["result"]["outcome"] == "hypotheses-unmet");
    CHECK(contains(out.report["result"]["reason"].get<std::string>(), "tau != 0"));
}

TEST_CASE("verify-identities on a recurrence") {
    const RunOutput out = cmd_run(config_from_text(R"({"mode": "verify-identities",
      "recurrence": {"beta": ["1", "2", "0", "-1", "3", "1/2", "1", "2", "0", "1", "1", "1", "2", "1", "1"],
                     "alpha": ["1", "0", "2", "1", "1/3", "1", "1", "1", "1", "2", "1", "1", "1", "1", "1"],
                     "gamma": ["1", "2", "3", "1", "1", "1", "-1", "1", "1", "1", "1", "1", "1", "1", "1"]}})"));
    CHECK(out.exit_code == 0);
    CHECK(out.report["result"]["outcome"] == "passed");
}

TEST_CASE("sweep with one draw equals a single run") {
    RunConfig c = config_from_text(R"({"mode": "sweep", "suite": "theorem4", "seed": 3, "draws": 1})");
    const RunOutput sweep = cmd_sweep(c);
    const Draw d = sample_draw(Suite::theorem4, 3, 0, c.pipeline());
    RunConfig single;
    single.mode = Mode::verify_theorem4;
    single.op = d.J;
    const RunOutput run = cmd_run(single);
    CHECK(sweep.report["draws"][0]["outcome"] == run.report["result"]["outcome"]);
    CHECK(sweep.report["draws"][0]["checks"] == run.report["result"]["checks"].size());
    CHECK(to_json(run_sweep(Suite::theorem4, 3, 1, c.pipeline(), 1).entries[0].result) == run.report["result"]);
}

TEST_CASE("sweep reports are deterministic") {
    RunConfig c = config_from_text(R"({"mode": "sweep", "suite": "theorem5", "seed": 11, "draws": 4})");
    c.threads = 1;
    const std::string a = dump_report(cmd_sweep(c).report);
    c.threads = 4;
    const std::string b = dump_report(cmd_sweep(c).report);
    CHECK(a == b);
    const Json j = Json::parse(a);
    CHECK(j["summary"]["violated"] == 0);
    CHECK(j["summary"]["passed"].get<std::size_t>() + j["summary"]["hypotheses_unmet"].get<std::size_t>() == 4);
}
