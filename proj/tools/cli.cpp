// Copyright 2026 The eulb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>

#include "eulb/config.hpp"
#include "eulb/errors.hpp"
#include "eulb/reports.hpp"
#include "eulb/sweep.hpp"

namespace eulb::cli {

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entropic uncertainty lower bounds for a memory qubit in a shared Lorentzian reservoir", "eulb"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    auto *sweep = app.add_subcommand("sweep", "Tabulate bounds over time for each qubit count and write CSV");
    std::optional<int> fig;
    std::string sweep_config;
    std::string out_path;
    auto *fig_opt = sweep->add_option("--fig", fig, "Figure preset (2, 3, 4 or 5)");
    auto *cfg_opt = sweep->add_option("--config", sweep_config, "Configuration file (key: value lines)");
    fig_opt->excludes(cfg_opt);
    sweep->add_option("--out", out_path, "Output CSV path, '-' for stdout")->required();

    auto *oracle = app.add_subcommand("oracle", "Check the closed-form amplitude against numerical oracles");
    std::string oracle_config;
    std::optional<int> modes;
    double window = 20.0;
    oracle->add_option("--config", oracle_config, "Configuration file (key: value lines)")->required();
    auto *modes_opt = oracle->add_option("--discrete-modes", modes, "Also run the discrete-mode oracle with n modes");
    oracle->add_option("--window", window, "Discrete-mode half-width as a multiple of lambda (default 20)")
        ->needs(modes_opt);

    auto *audit = app.add_subcommand("audit", "Compare the reference closed forms with spectral definitions");
    double p = 0.5;
    audit->add_option("--p", p, "Bell-diagonal weight p (default 0.5)");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (sweep->parsed()) {
            if (!fig && sweep_config.empty()) {
                err << "sweep: one of --fig or --config is required\n";
                return kExitValidation;
            }
            const SweepConfig cfg = fig ? figure_preset(*fig) : load_config(sweep_config);
            const SweepOutput result = run_sweep(cfg);
            if (out_path == "-") {
                emit_csv(result, out);
            } else {
                write_csv(result, out_path);
            }
            return kExitOk;
        }
        if (oracle->parsed()) {
            OracleOptions options;
            options.discrete_modes = modes;
            options.window_over_lambda = window;
            const OracleReport report = oracle_report(load_config(oracle_config), options);
            out << format_oracle_report(report);
            return report.passed() ? kExitOk : kExitTolerance;
        }
        if (audit->parsed()) {
            out << format_discrepancy_report(discrepancy_report(p));
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace eulb::cli
