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

// One-sided amplitude-damping channel on the memory qubit B, and the initial
// states the sweeps start from.

#include <array>
#include <cstdint>

#include "eulb/linalg.hpp"

namespace eulb {

/// Which computational basis state of the memory qubit decays. The other
/// one is absorbing.
enum class ExcitedLabel : std::uint8_t { Zero = 0, One = 1 };

/// Bell-diagonal family p |psi-><psi-| + (1-p)/2 (|psi+><psi+| + |phi+><phi+|).
struct BellDiagonalParams {
    double p = 0.5;

    void validate() const;  ///< DomainError unless p in [0, 1]

    /// (r1, r2, r3) = (1 - 2p, -p, -p) in rho = (I + sum r_i s_i (x) s_i)/4.
    std::array<double, 3> correlations() const { return {1.0 - 2.0 * p, -p, -p}; }
};

/// Applies on B the map with Kraus operators
///   K0 = c |e><e| + |g><g|,   K1 = sqrt(1 - c^2) |g><e|
/// (e = excited, g = the other level). Excited populations scale by c^2 and
/// e-g coherences by c. Throws ChannelError when |c| > 1.
TwoQubit apply_memory_decay(const TwoQubit &rho, double c, ExcitedLabel excited = ExcitedLabel::Zero);

/// (|00> + |11>)/sqrt(2).
TwoQubit max_entangled_initial();

/// Built from Bell projectors.
TwoQubit bell_diagonal_initial(const BellDiagonalParams &params);

/// The evolved maximally entangled state written out entry by entry:
///   (1/2) [[c^2, 0, 0, c], [0, 1 - c^2, 0, 0], [0, 0, 0, 0], [c, 0, 0, 1]].
/// Identical to apply_memory_decay(max_entangled_initial(), c, Zero).
/// Throws DomainError when |c| > 1.
TwoQubit evolved_max_entangled_closed_form(double c);

/// A matrix reproduced literally from a reference closed form that is known
/// not to satisfy its own c = 1 limit. Not necessarily positive, so it is not
/// a DensityMatrix.
struct FlaggedMatrix {
    Mat4 matrix;
    bool known_inconsistent = true;
};

/// Reference entrywise form of the evolved Bell-diagonal state:
///   r11 = (1+p)/4 c^2,            r14 = (1-p)/2 |c|
///   r22 = (1-p)/4 + (1+p)/4 (1-c^2),  r23 = (1-3p)/2 c
///   r33 = (1-p)/4 c^2,            r44 = (1+p)/4 + (1-p)/4 (1-c^2)
/// Its coherences are twice those of bell_diagonal_initial at c = 1 and its
/// diagonal is permuted; used only by the discrepancy audit.
FlaggedMatrix evolved_bell_diagonal_reference(double p, double c);

}  // namespace eulb
