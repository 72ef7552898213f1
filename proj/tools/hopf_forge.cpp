/* Copyright 2026 The hopf-forge Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <iostream>

#include <CLI11.hpp>

#include "hopf_forge/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hopf-forge: tensor coalgebra decompositions over F_p"};
    app.require_subcommand(1, 1);
    hopf::RunConfig config;

    auto common = [&config](CLI::App* sub) {
        sub->add_option("--input", config.input, "module description file");
        sub->add_option("--p", config.p, "prime (default module: p - 1 generators of degree 1)")
            ->check(CLI::Range(2u, 1000u));
        sub->add_option("--max-length", config.max_length, "truncation bound N");
        sub->add_option("--format", config.format, "json, csv or text");
    };

    auto* decompose = app.add_subcommand("decompose", "per-length decomposition report");
    common(decompose);

    auto* lie = app.add_subcommand("lie", "Witt, L_n, Lbar_n and Lie(n) tables");
    common(lie);
    lie->add_option("--n", config.n, "largest length");
    lie->add_option("--d", config.d, "number of degree-1 letters");
    lie->add_option("--mode", config.mode, "graded or ungraded");

    auto* verify = app.add_subcommand("verify", "property suite");
    common(verify);
    verify->add_option("--seed", config.seed, "seed for randomized checks");
    verify->add_option("--only", config.only, "run a single check");

    auto* selfmap = app.add_subcommand("selfmap", "deg^k of a self-map of V");
    common(selfmap);
    selfmap->add_option("--matrix", config.matrix, "rows ';'-separated, entries ','-separated");
    selfmap->add_option("--k", config.k, "number of levels");

    auto* series = app.add_subcommand("series", "Poincare series and EHP bookkeeping");
    common(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hopf::kExitInputError;
    }
    config.command = app.get_subcommands().front()->get_name();
    return hopf::run_command(config, std::cout, std::cerr);
}
