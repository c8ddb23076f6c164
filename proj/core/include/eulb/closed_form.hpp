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

// Reference closed-form expressions for the two worked families (maximally
// entangled and Bell-diagonal p = 1/2 under memory decay), and a side-by-side
// comparison with the spectral definitions. The closed forms are audit
// targets only; several of them do not match the definitions.

#include <string>
#include <vector>

namespace eulb {

struct ClosedFormTerms {
    double eta = 1.0;  ///< sqrt(1 - c^2 + c^4), in [sqrt(3)/2, 1]
    double alpha_plus = 1.0;
    double alpha_minus = 1.0;
    double theta = 0.25;  ///< eta / 4
};

/// Throws DomainError when |c| > 1.
ClosedFormTerms closed_form_terms(double c);

namespace closed_form {

// Maximally entangled family.
double max_entangled_post_x_entropy(double c);
double max_entangled_post_z_entropy(double c);
double max_entangled_uncertainty_left(double c);
double max_entangled_delta(double c);
double max_entangled_adabi(double c);

// Bell-diagonal family at p = 1/2.
double bell_diagonal_post_x_entropy(double c);
double bell_diagonal_post_z_entropy(double c);
double bell_diagonal_uncertainty_left(double c);
double bell_diagonal_delta(double c);
double bell_diagonal_adabi(double c);

}  // namespace closed_form

enum class StateFamily { MaxEntangled, BellDiagonal };

struct FormulaComparison {
    std::string name;  ///< e.g. "max_entangled.uncertainty_left"
    StateFamily family;
    double closed_form;
    double definition;
    double deviation;  ///< |closed_form - definition|
};

struct ClosedFormReport {
    double amplitude;
    double p;
    std::vector<FormulaComparison> rows;

    /// Throws std::out_of_range for an unknown name.
    const FormulaComparison &row(const std::string &name) const;
};

/// Evaluates every closed form at amplitude c and the matching definition on
/// the channel-evolved state (excited label |0>). The Bell-diagonal
/// definitions use weight p; the Bell-diagonal closed forms are for p = 1/2.
ClosedFormReport closed_form_report(double c, double p = 0.5);

}  // namespace eulb
