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

#include "twoorth/cli.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "twoorth/errors.hpp"

namespace twoorth {

namespace {

constexpr std::array<std::pair<Mode, const char*>, 7> kModes{{
    {Mode::classify, "classify"},
    {Mode::eigensolve, "eigensolve"},
    {Mode::verify_theorem4, "verify-theorem4"},
    {Mode::verify_theorem5, "verify-theorem5"},
    {Mode::verify_identities, "verify-identities"},
    {Mode::hahn, "hahn"},
    {Mode::sweep, "sweep"},
}};

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::uint64_t unsigned_field(const Json& j, const std::string& key) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ParseError("config." + key + ": expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::passed:
            return 0;
        case Outcome::hypotheses_unmet:
            return 2;
        case Outcome::violated:
            return 1;
    }
    return 1;
}

Json config_json(const RunConfig& cfg) {
    return {{"n_max", cfg.n_max}, {"moment_order", cfg.moment_order}, {"check_order", cfg.check_order}};
}

std::size_t supported_length(const RecurrenceCoeffs& rc) {
    return std::min({rc.beta_list.size(), rc.alpha_list.size() + 1, rc.gamma_list.size() + 2});
}

std::string pipeline_verdict(const char* mode, const PipelineResult& r) {
    std::string v = std::string(mode) + ": " + to_string(r.outcome) + " (" + std::to_string(r.report.lines().size()) +
                    " checks, " + std::to_string(r.report.failures()) + " failed)";
    if (!r.reason.empty()) v += ": " + r.reason;
    return v;
}

RunOutput run_classify(const RunConfig& cfg) {
    const LoweringClass c = classify_order(*cfg.op, cfg.n_max);
    RunOutput out;
    out.report = {{"mode", "classify"}, {"operator", to_json(*cfg.op)}, {"classification", to_json(c)}};
    if (c.classifiable()) {
        out.verdict = "classify: lowering operator of order k = " + std::to_string(*c.k) + " (checked to n = " +
                      std::to_string(c.horizon) + ")";
    } else {
        out.exit_code = 2;
        out.verdict = "classify: not classifiable, lambda vanishes at n = " + std::to_string(*c.failing_n) +
                      " for k = " + std::to_string(c.candidate_k);
    }
    return out;
}

RunOutput run_eigensolve(const RunConfig& cfg) {
    RunOutput out;
    out.report = {{"mode", "eigensolve"}, {"operator", to_json(*cfg.op)}, {"config", config_json(cfg)}};
    EigenSolution sol;
    try {
        sol = eigen_mps(*cfg.op, cfg.n_max);
    } catch (const NonInvertible& e) {
        out.exit_code = 2;
        out.report["error"] = e.what();
        out.verdict = std::string("eigensolve: ") + e.what();
        return out;
    } catch (const RepeatedEigenvalue& e) {
        out.exit_code = 2;
        out.report["error"] = e.what();
        out.verdict = std::string("eigensolve: ") + e.what();
        return out;
    }
    Json polys = Json::array();
    for (const auto& p : sol.P) polys.push_back(to_json(p));
    Json lambdas = Json::array();
    for (const auto& l : sol.lambdas) lambdas.push_back(to_json(l));
    const bool ok = verify_eigen(*cfg.op, sol.P, sol.lambdas);
    out.report["mps"] = polys;
    out.report["lambdas"] = lambdas;
    out.report["verified"] = ok;
    std::string shape = "not 2-orthogonal";
    if (sol.P.size() >= 4) {
        const FitResult fit = fit_2orth_recurrence(sol.P);
        if (const auto* rc = std::get_if<RecurrenceCoeffs>(&fit)) {
            out.report["recurrence"] = to_json(*rc);
            shape = "2-orthogonal";
        } else {
            const auto& no = std::get<NotTwoOrthogonal>(fit);
            out.report["not_two_orthogonal"] = {{"n", no.n}, {"nu", no.nu}, {"reason", no.reason}};
        }
    }
    out.exit_code = ok ? 0 : 1;
    out.verdict = std::string("eigensolve: ") + (ok ? "verified" : "eigen relation FAILED") + " through n = " +
                  std::to_string(cfg.n_max) + ", eigen-MPS " + shape;
    return out;
}

RunOutput run_hahn(const RunConfig& cfg) {
    RunOutput out;
    out.report = {{"mode", "hahn"}, {"config", config_json(cfg)}};
    MPSPrefix P;
    if (cfg.recurrence) {
        P = generate(*cfg.recurrence, std::min(cfg.n_max, supported_length(*cfg.recurrence)));
        out.report["recurrence"] = to_json(*cfg.recurrence);
    } else {
        try {
            P = eigen_mps(*cfg.op, cfg.n_max).P;
        } catch (const Error& e) {
            out.exit_code = 2;
            out.report["error"] = e.what();
            out.verdict = std::string("hahn: ") + e.what();
            return out;
        }
        out.report["operator"] = to_json(*cfg.op);
    }
    if (P.size() < 5) throw ParseError("hahn: need at least P_0..P_4");
    const HahnVerdict v = hahn_check(P);
    out.report["hahn"] = to_json(v);
    out.report["horizon"] = P.size() - 2;
    out.exit_code = v.classical ? 0 : 2;
    out.verdict = std::string("hahn: ") + (v.classical ? "classical" : "not classical") + " (derivative sequence through n = " +
                  std::to_string(P.size() - 2) + ")";
    return out;
}

}  // namespace

const char* to_string(Mode m) {
    for (const auto& [mode, name] : kModes) {
        if (mode == m) return name;
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view s) {
    for (const auto& [mode, name] : kModes) {
        if (s == name) return mode;
    }
    return std::nullopt;
}

RunConfig config_from_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("config: syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    if (!j.is_object()) throw ParseError("config: expected an object at the top level");

    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "mode") {
            if (!value.is_string()) throw ParseError("config.mode: expected a string");
            auto m = mode_from_string(value.get<std::string>());
            if (!m) throw ParseError("config.mode: unknown mode \"" + value.get<std::string>() + "\"");
            cfg.mode = *m;
        } else if (key == "operator") {
            cfg.op = operator_from_json(value, "config.operator");
        } else if (key == "recurrence") {
            cfg.recurrence = recurrence_from_json(value, "config.recurrence");
        } else if (key == "tau") {
            cfg.tau = rational_from_json(value, "config.tau");
        } else if (key == "suite") {
            const std::string s = value.is_string() ? value.get<std::string>() : "";
            if (s == "theorem4") {
                cfg.suite = Suite::theorem4;
            } else if (s == "theorem5") {
                cfg.suite = Suite::theorem5;
            } else {
                throw ParseError("config.suite: expected \"theorem4\" or \"theorem5\"");
            }
        } else if (key == "n_max") {
            cfg.n_max = unsigned_field(value, key);
        } else if (key == "moment_order") {
            cfg.moment_order = unsigned_field(value, key);
        } else if (key == "check_order") {
            cfg.check_order = unsigned_field(value, key);
        } else if (key == "seed") {
            cfg.seed = unsigned_field(value, key);
        } else if (key == "draws") {
            cfg.draws = unsigned_field(value, key);
        } else if (key == "threads") {
            cfg.threads = static_cast<unsigned>(unsigned_field(value, key));
        } else {
            throw ParseError("config." + key + ": unknown field");
        }
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.n_max < 4) throw ParseError("n_max: must be at least 4");
    if (cfg.check_order + 12 > cfg.moment_order) throw ParseError("check_order: must not exceed moment_order - 12");
    const char* mode = to_string(cfg.mode);
    switch (cfg.mode) {
        case Mode::classify:
        case Mode::eigensolve:
        case Mode::verify_theorem4:
            if (!cfg.op) throw ParseError(std::string(mode) + ": config.operator is required");
            break;
        case Mode::verify_theorem5:
            if (!cfg.op) throw ParseError(std::string(mode) + ": config.operator is required");
            if (!cfg.tau) throw ParseError(std::string(mode) + ": config.tau is required");
            break;
        case Mode::verify_identities:
            if (!cfg.recurrence) throw ParseError(std::string(mode) + ": config.recurrence is required");
            break;
        case Mode::hahn:
            if (!cfg.op && !cfg.recurrence) {
                throw ParseError(std::string(mode) + ": config.operator or config.recurrence is required");
            }
            break;
        case Mode::sweep:
            if (cfg.draws < 1) throw ParseError("draws: must be at least 1");
            break;
    }
}

RunOutput cmd_run(const RunConfig& cfg) {
    validate(cfg);
    const PipelineConfig pc = cfg.pipeline();
    switch (cfg.mode) {
        case Mode::classify:
            return run_classify(cfg);
        case Mode::eigensolve:
            return run_eigensolve(cfg);
        case Mode::hahn:
            return run_hahn(cfg);
        case Mode::sweep:
            return cmd_sweep(cfg);
        case Mode::verify_theorem4:
        case Mode::verify_theorem5:
        case Mode::verify_identities:
            break;
    }

    PipelineResult r;
    Json head{{"mode", to_string(cfg.mode)}, {"config", config_json(cfg)}};
    if (cfg.mode == Mode::verify_theorem4) {
        r = run_theorem4(*cfg.op, pc);
        head["operator"] = to_json(*cfg.op);
    } else if (cfg.mode == Mode::verify_theorem5) {
        r = run_theorem5(*cfg.op, *cfg.tau, pc);
        head["operator"] = to_json(*cfg.op);
        head["tau"] = to_json(*cfg.tau);
    } else {
        r = run_identities(*cfg.recurrence, pc);
        head["recurrence"] = to_json(*cfg.recurrence);
    }
    RunOutput out;
    out.report = head;
    out.report["result"] = to_json(r);
    out.exit_code = exit_code_for(r.outcome);
    out.verdict = pipeline_verdict(to_string(cfg.mode), r);
    return out;
}

RunOutput cmd_sweep(const RunConfig& cfg) {
    validate(cfg);
    const SweepSummary s = run_sweep(cfg.suite, cfg.seed, cfg.draws, cfg.pipeline(), cfg.threads);

    Json draws = Json::array();
    Json violated = Json::array();
    for (const auto& e : s.entries) {
        Json d = to_json(e.draw);
        d["outcome"] = to_string(e.result.outcome);
        if (!e.result.reason.empty()) d["reason"] = e.result.reason;
        d["checks"] = e.result.report.lines().size();
        draws.push_back(std::move(d));
        if (e.result.outcome == Outcome::violated) {
            violated.push_back({{"draw", to_json(e.draw)}, {"result", to_json(e.result)}});
        }
    }
    const Rational unmet_rate(static_cast<long>(s.hypotheses_unmet), static_cast<long>(cfg.draws));

    RunOutput out;
    out.report = {{"mode", "sweep"},
                  {"suite", to_string(cfg.suite)},
                  {"seed", cfg.seed},
                  {"config", config_json(cfg)},
                  {"summary",
                   {{"draws", cfg.draws},
                    {"passed", s.passed},
                    {"hypotheses_unmet", s.hypotheses_unmet},
                    {"violated", s.violated},
                    {"unmet_rate", to_json(unmet_rate)}}},
                  {"draws", draws},
                  {"violated_instances", violated}};
    out.exit_code = s.violated > 0 ? 1 : 0;
    out.verdict = std::string("sweep ") + to_string(cfg.suite) + ": " + std::to_string(s.passed) + " passed, " +
                  std::to_string(s.hypotheses_unmet) + " hypotheses-unmet, " + std::to_string(s.violated) +
                  " violated of " + std::to_string(cfg.draws);
    return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace twoorth
