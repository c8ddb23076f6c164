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

// Memory-assisted entropic uncertainty: the left-hand side
// S(Q|B) + S(R|B) for measurements on A, the bound log2(1/c) + S(A|B), and
// its tightening by max(0, delta) with
//   delta = I(A;B) - I(Q;B) - I(R;B).
// Everything is computed from spectra.

#include <array>
#include <string>

#include "eulb/linalg.hpp"

namespace eulb {

using Ket = std::array<Complex, 2>;

/// Projective qubit measurement given by an orthonormal eigenbasis.
class Observable {
   public:
    /// Throws DomainError unless the kets are orthonormal within 1e-12.
    Observable(std::string name, const Ket &first, const Ket &second);

    const std::string &name() const noexcept { return name_; }
    const Ket &eigenvector(std::size_t i) const { return basis_.at(i); }
    Mat2 projector(std::size_t i) const;

   private:
    std::string name_;
    std::array<Ket, 2> basis_;
};

Observable pauli_x();
Observable pauli_z();

/// Basis {(cos a, sin a), (-sin a, cos a)}.
Observable rotated_basis(std::string name, double angle);

/// max_{i,j} |<q_i|r_j>|^2.
double complementarity(const Observable &q, const Observable &r);

/// sum_i (P_i (x) I) rho (P_i (x) I) with P_i the projectors of `obs` on A.
TwoQubit post_measurement_state(const TwoQubit &rho, const Observable &obs);

struct MeasurementResult {
    std::array<double, 2> probabilities{};
    /// tr_A(P_i rho P_i) / p_i; I/2 when the outcome has zero probability.
    std::array<Qubit, 2> conditional_memory_states{};
    std::array<bool, 2> zero_probability{};
};

/// Outcome probabilities are treated as zero at or below this.
inline constexpr double kZeroProbability = 1e-12;

MeasurementResult measure(const TwoQubit &rho, const Observable &obs);

/// I(O;B) = S(rho_B) - sum_i p_i S(rho_i^B).
double holevo(const TwoQubit &rho, const Observable &obs);

/// S(A) + S(B) - S(AB).
double mutual_information(const TwoQubit &rho);

/// S(AB) - S(B).
double conditional_entropy(const TwoQubit &rho);

/// [S(post_q) - S(B)] + [S(post_r) - S(B)].
double uncertainty_left(const TwoQubit &rho, const Observable &q, const Observable &r);

/// log2(1/c) + S(A|B).
double berta_bound(const TwoQubit &rho, const Observable &q, const Observable &r);

struct AdabiBound {
    double bound = 0.0;  ///< berta + max(0, delta)
    double delta = 0.0;
};

AdabiBound adabi_bound(const TwoQubit &rho, const Observable &q, const Observable &r);

/// One time point of a sweep. Entropic fields are in bits.
struct BoundsRecord {
    double gamma0_t = 0.0;
    double amplitude = 1.0;
    double u_left = 0.0;
    double berta = 0.0;
    double adabi = 0.0;
    double delta = 0.0;
    double holevo_q = 0.0;
    double holevo_r = 0.0;
    double mutual_info = 0.0;
    double cond_entropy = 0.0;
};

/// All fields at once, sharing the marginal and post-measurement spectra.
BoundsRecord bounds_record(const TwoQubit &rho, const Observable &q, const Observable &r, double gamma0_t = 0.0,
                           double amplitude = 1.0);

/// u_left >= adabi - slack and adabi >= berta - slack.
bool satisfies_inequality_chain(const BoundsRecord &rec, double slack = 1e-9);

}  // namespace eulb
