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

// Command-line front end: one subcommand per run mode.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twoorth/cli.hpp"
#include "twoorth/errors.hpp"

namespace {

constexpr int kInputError = 3;

struct Flags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> draws;
    std::optional<std::size_t> nmax;
    std::optional<std::size_t> order;
    std::optional<std::size_t> moments;
    std::optional<std::string> suite;
    std::optional<std::string> tau;
    std::optional<unsigned> threads;
};

twoorth::RunConfig build_config(twoorth::Mode mode, const Flags& f) {
    twoorth::RunConfig cfg;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw twoorth::ParseError("cannot read config file " + f.config);
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = twoorth::config_from_text(buf.str());
        if (cfg.mode != mode && buf.str().find("\"mode\"") != std::string::npos) {
            throw twoorth::ParseError(std::string("config.mode: \"") + twoorth::to_string(cfg.mode) +
                                      "\" does not match subcommand \"" + twoorth::to_string(mode) + "\"");
        }
    }
    cfg.mode = mode;
    if (f.seed) cfg.seed = *f.seed;
    if (f.draws) cfg.draws = *f.draws;
    if (f.nmax) cfg.n_max = *f.nmax;
    if (f.order) cfg.check_order = *f.order;
    if (f.moments) cfg.moment_order = *f.moments;
    if (f.threads) cfg.threads = *f.threads;
    if (f.tau) cfg.tau = twoorth::rational_from_json(*f.tau, "--tau");
    if (f.suite) {
        if (*f.suite == "theorem4") {
            cfg.suite = twoorth::Suite::theorem4;
        } else if (*f.suite == "theorem5") {
            cfg.suite = twoorth::Suite::theorem5;
        } else {
            throw twoorth::ParseError("--suite: expected theorem4 or theorem5");
        }
    }
    return cfg;
}

int execute(twoorth::Mode mode, const Flags& f) {
    try {
        const twoorth::RunConfig cfg = build_config(mode, f);
        const twoorth::RunOutput out = twoorth::cmd_run(cfg);
        if (!f.out.empty()) {
            std::ofstream file(f.out, std::ios::binary);
            if (!file) throw twoorth::ParseError("cannot write report file " + f.out);
            file << twoorth::dump_report(out.report);
        }
        std::cout << out.verdict << '\n';
        return out.exit_code;
    } catch (const twoorth::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const twoorth::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of eigen-sequences of third-order differential operators"};
    app.require_subcommand(1);

    Flags flags;
    std::optional<twoorth::Mode> chosen;
    const char* modes[] = {"classify",        "eigensolve", "verify-theorem4", "verify-theorem5",
                           "verify-identities", "hahn",     "sweep"};
    for (const char* name : modes) {
        CLI::App* sub = app.add_subcommand(name, std::string("run mode ") + name);
        sub->add_option("--config", flags.config, "JSON config file");
        sub->add_option("--out", flags.out, "write the structured report here");
        sub->add_option("--seed", flags.seed, "sampler seed");
        sub->add_option("--draws", flags.draws, "number of random draws");
        sub->add_option("--nmax", flags.nmax, "eigensolve/fit horizon");
        sub->add_option("--order", flags.order, "moment order the identities are checked to");
        sub->add_option("--moments", flags.moments, "moment order of the dual sequence");
        sub->add_option("--suite", flags.suite, "sweep suite: theorem4 or theorem5");
        sub->add_option("--tau", flags.tau, "tau for verify-theorem5, as p/q");
        sub->add_option("--threads", flags.threads, "sweep workers (0 = all cores)");
        sub->callback([&chosen, name] { chosen = twoorth::mode_from_string(name); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }
    return execute(*chosen, flags);
}
