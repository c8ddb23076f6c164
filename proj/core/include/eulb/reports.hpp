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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulb/config.hpp"

namespace eulb {

struct OracleOptions {
    /// Also run the discrete-mode oracle with this many modes.
    std::optional<int> discrete_modes;
    double window_over_lambda = 20.0;
    double kernel_tolerance = 1e-6;
    double discrete_tolerance = 5e-3;
    double norm_tolerance = 1e-8;
};

struct OracleEntry {
    int n_qubits = 1;
    double kernel_max_deviation = 0.0;
    std::optional<double> discrete_max_deviation;
    double discrete_norm_error = 0.0;
    bool window_warning = false;
};

struct OracleReport {
    SweepConfig config;
    OracleOptions options;
    std::vector<OracleEntry> entries;

    bool passed() const;
};

/// Max |closed form - oracle| per N over the configuration's time grid.
OracleReport oracle_report(const SweepConfig &config, const OracleOptions &options = {});

std::string format_oracle_report(const OracleReport &report);

/// Max deviation at or below this counts as consistent.
inline constexpr double kConsistencyTolerance = 1e-9;

struct FormulaAudit {
    std::string name;
    std::vector<double> deviations;  ///< one per grid point
    double max_deviation = 0.0;
    double at_c = 0.0;   ///< grid amplitude of the max deviation
    std::string where;   ///< extra location info (matrix entry), may be empty

    bool flagged() const { return !(max_deviation <= kConsistencyTolerance); }
};

struct DiscrepancyReport {
    double p = 0.5;
    std::vector<double> c_grid;  ///< 101 points over [0, 1]
    std::vector<FormulaAudit> audits;

    /// Throws std::out_of_range for an unknown name.
    const FormulaAudit &audit(const std::string &name) const;
};

/// Every closed form against its definition on the c grid, plus the
/// reference evolved Bell-diagonal matrix against the channel-evolved state
/// (entry "bell_diagonal.evolved_matrix"). Throws DomainError unless
/// p in [0, 1].
DiscrepancyReport discrepancy_report(double p = 0.5);

std::string format_discrepancy_report(const DiscrepancyReport &report);

}  // namespace eulb
