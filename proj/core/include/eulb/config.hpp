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

// Sweep configuration and its text format.
//
// The format is one `key: value` pair per line. Blank lines and everything
// after `#` are ignored. Keys:
//
//   state               max_entangled | bell_diagonal   (max_entangled)
//   p                   Bell-diagonal weight in [0, 1]  (0.5)
//   lambda_over_gamma0  spectral width, > 0             (0.1)
//   n_qubits_list       comma-separated integers >= 1   (1, 2, 5, 10)
//   t_max_gamma0        end of the time grid, > 0       (20)
//   steps               grid points including t = 0, >= 2  (2001)
//   excited_label       0 | 1                           (0)
//
// Unknown and repeated keys are rejected.

#include <string>
#include <string_view>
#include <vector>

#include "eulb/channel.hpp"

namespace eulb {

enum class InitialState { MaxEntangled, BellDiagonal };

std::string_view to_string(InitialState s);

struct SweepConfig {
    InitialState state = InitialState::MaxEntangled;
    double p = 0.5;
    double lambda_over_gamma0 = 0.1;
    std::vector<int> n_qubits_list{1, 2, 5, 10};
    double t_max_gamma0 = 20.0;
    int steps = 2001;
    ExcitedLabel excited_label = ExcitedLabel::Zero;

    /// Throws ValidationError naming the offending key.
    void validate() const;

    /// Uniform grid over [0, t_max_gamma0] with `steps` points; exact 0 and
    /// t_max at the ends.
    std::vector<double> time_grid() const;

    friend bool operator==(const SweepConfig &, const SweepConfig &) = default;
};

/// Throws ParseError (with a 1-based line) or ValidationError.
SweepConfig parse_config(std::string_view text);

/// Reads and parses a file; IoError if it cannot be read.
SweepConfig load_config(const std::string &path);

/// Writes every key; parse_config(format_config(c)) == c.
std::string format_config(const SweepConfig &config);

/// Presets behind the four time-evolution figures: 2 and 3 start maximally
/// entangled, 4 and 5 Bell-diagonal with p = 1/2; 2 and 4 use
/// lambda = 0.1 gamma0, 3 and 5 lambda = 40 gamma0. Other ids throw
/// DomainError.
SweepConfig figure_preset(int fig);

}  // namespace eulb
