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

#include <iosfwd>
#include <string>
#include <vector>

#include "eulb/bounds.hpp"
#include "eulb/config.hpp"

namespace eulb {

/// Version string written into CSV metadata.
const char *library_version();

struct SweepRow {
    int n_qubits;
    BoundsRecord record;
};

struct SweepOutput {
    SweepConfig config;
    /// Sorted by (n_qubits, gamma0_t); |n_qubits_list| * steps rows.
    std::vector<SweepRow> rows;
};

/// For each N and grid time: C from the closed form (gamma0 = 1,
/// lambda = lambda_over_gamma0), the configured initial state decayed on the
/// memory qubit, and the full BoundsRecord for (sigma_x, sigma_z).
/// N values run concurrently; the result does not depend on scheduling.
SweepOutput run_sweep(const SweepConfig &config);

/// Column header, without trailing newline.
inline constexpr const char *kCsvHeader =
    "n,gamma0_t,C,u_left,berta,adabi,delta,holevo_x,holevo_z,mutual_info,cond_entropy";

/// 12 significant digits, '.' decimal point, "-0" printed as "0".
std::string format_csv_number(double v);

/// `#`-prefixed metadata (version and the configuration), header, rows.
/// Lines end in '\n'.
void emit_csv(const SweepOutput &out, std::ostream &os);

/// emit_csv to a file; IoError naming the path on failure.
void write_csv(const SweepOutput &out, const std::string &path);

}  // namespace eulb
