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

// Decay amplitude of one qubit among N identical qubits coupled to a common
// zero-temperature Lorentzian reservoir, in the single-excitation sector.
//
//   J(w) = gamma0 lambda^2 / (2 pi [(w0 - w)^2 + lambda^2])
//
// Times passed to trajectory functions are dimensionless (gamma0 * t);
// decay_amplitude() takes physical time.

#include <span>
#include <vector>

namespace eulb {

struct ReservoirParams {
    double gamma0 = 1.0;  ///< relaxation rate
    double lambda = 1.0;  ///< spectral width
    int n_qubits = 1;     ///< qubits sharing the reservoir, memory included

    /// Throws DomainError unless gamma0 > 0, lambda > 0, n_qubits >= 1.
    void validate() const;

    double bath_correlation_time() const { return 1.0 / lambda; }
    double system_relaxation_time() const { return 1.0 / gamma0; }

    /// lambda^2 - 2 N gamma0 lambda; the amplitude oscillates when negative.
    double discriminant() const;
};

enum class RegimeKind { Markovian, NonMarkovian };

struct Regime {
    RegimeKind kind;
    double ratio;  ///< gamma0 / lambda
};

/// Markovian iff gamma0 / lambda <= 1/2.
Regime classify_regime(const ReservoirParams &params);

/// C(t) = (N-1)/N + e^{-lambda t/2}/N [cosh(Dt/2) + (lambda/D) sinh(Dt/2)],
/// D = sqrt(lambda^2 - 2 N gamma0 lambda). Real for every t >= 0; the
/// trigonometric continuation is used when D is imaginary and a Taylor
/// expansion when |D^2| <= (1e-8 lambda)^2. Throws DomainError for t < 0.
double decay_amplitude(const ReservoirParams &params, double t);

/// (N-1)/N. Throws RegimeError outside the Markovian regime.
double asymptotic_amplitude(const ReservoirParams &params);

struct AmplitudeTrajectory {
    std::vector<double> gamma0_t;
    std::vector<double> amplitudes;
    /// Discrete-mode oracle only: the frequency window was narrower than
    /// 10 lambda.
    bool window_warning = false;
    /// Discrete-mode oracle only: max |sum |amp|^2 - 1| over the grid.
    double max_norm_error = 0.0;
    /// Discrete-mode oracle only: max |Im C| over the grid.
    double max_imaginary = 0.0;
};

/// Closed form sampled on a dimensionless grid.
AmplitudeTrajectory closed_form_trajectory(const ReservoirParams &params, std::span<const double> gamma0_t);

struct KernelOdeOptions {
    double step_gamma0 = 1e-3;  ///< max RK4 step, in units of 1/gamma0
};

/// Integrates the memory-kernel dynamics in local form. With s = sum_j C_j
/// and z(t) = int_0^t (gamma0 lambda/2) e^{-lambda(t-tau)} s(tau) dtau:
///   ds/dt = -N z,  dz/dt = (gamma0 lambda/2) s - lambda z,  s(0)=1, z(0)=0
/// and C_i = (N-1)/N + s/N. Fixed-step classical RK4, never stepping over a
/// grid point. Throws DomainError for a negative or non-ascending grid.
AmplitudeTrajectory kernel_ode_oracle(const ReservoirParams &params, std::span<const double> gamma0_t,
                                      const KernelOdeOptions &options = {});

/// Uniform midpoint sampling of J over [w0 - W, w0 + W].
struct ModeGrid {
    int n_modes = 0;
    double window = 0.0;             ///< half-width W
    std::vector<double> detunings;   ///< w_k - w0
    std::vector<double> couplings;   ///< g_k = sqrt(J(w_k) dw), real

    double coupling_weight() const;  ///< sum g_k^2
};

/// Throws DomainError for n_modes < 1 or window_over_lambda <= 0.
ModeGrid make_mode_grid(const ReservoirParams &params, int n_modes, double window_over_lambda);

/// int_{w0-W}^{w0+W} J(w) dw = (gamma0 lambda / pi) atan(W / lambda).
double lorentzian_weight(const ReservoirParams &params, double window);

struct DiscreteModeOptions {
    /// Max step in units of 1/gamma0; <= 0 picks min(1e-3, 0.02 gamma0 / W).
    double step_gamma0 = 0.0;
};

/// Brute-force Schroedinger evolution of (C_1..C_N, mode amplitudes) with the
/// excitation initially on qubit 1, in the frame rotating at w0. Strang
/// splitting: exact mode phases, exact exponential of the rank-2 coupling.
AmplitudeTrajectory discrete_mode_oracle(const ReservoirParams &params, std::span<const double> gamma0_t,
                                         const ModeGrid &grid, const DiscreteModeOptions &options = {});

}  // namespace eulb
