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

#include "eulb/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "eulb/errors.hpp"

namespace eulb {
namespace {

constexpr double kTaylorScale = 1e-8;
// Beyond this the hyperbolic form is evaluated through exponentials to avoid
// 0 * inf.
constexpr double kHyperbolicSplit = 20.0;

void validate_grid(std::span<const double> gamma0_t) {
    for (std::size_t i = 0; i < gamma0_t.size(); ++i) {
        if (!(gamma0_t[i] >= 0.0) || !std::isfinite(gamma0_t[i])) {
            throw DomainError("time grid: entry " + std::to_string(i) + " is negative or not finite");
        }
        if (i > 0 && !(gamma0_t[i] > gamma0_t[i - 1])) {
            throw DomainError("time grid: not strictly ascending at entry " + std::to_string(i));
        }
    }
}

// e^{-lambda t/2} [cosh(Dt/2) + (lambda/D) sinh(Dt/2)]
double bracket(double lambda, double disc, double t, double nyq) {
    const double envelope = std::exp(-0.5 * lambda * t);
    const double half_lt = 0.5 * lambda * t;
    const double eps2 = (kTaylorScale * lambda) * (kTaylorScale * lambda);

    if (std::abs(disc) <= eps2) {
        const double x2 = 0.25 * disc * t * t;
        const double cosh_x = 1.0 + x2 / 2.0 + x2 * x2 / 24.0;
        const double sinhc_x = 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
        return envelope * (cosh_x + half_lt * sinhc_x);
    }
    if (disc > 0.0) {
        const double d = std::sqrt(disc);
        const double x = 0.5 * d * t;
        if (x < kHyperbolicSplit) {
            return envelope * (std::cosh(x) + half_lt * std::sinh(x) / x);
        }
        // D - lambda = -2 N gamma0 lambda / (D + lambda), free of cancellation.
        const double slow = std::exp(0.5 * t * (-nyq / (d + lambda)));
        const double fast = std::exp(-0.5 * t * (d + lambda));
        return 0.5 * (1.0 + lambda / d) * slow + 0.5 * (1.0 - lambda / d) * fast;
    }
    const double y = 0.5 * std::sqrt(-disc) * t;
    return envelope * (std::cos(y) + half_lt * std::sin(y) / y);
}

}  // namespace

void ReservoirParams::validate() const {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw DomainError("gamma0 must be positive and finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
    if (n_qubits < 1) throw DomainError("n_qubits must be at least 1");
}

double ReservoirParams::discriminant() const {
    return lambda * (lambda - 2.0 * n_qubits * gamma0);
}

Regime classify_regime(const ReservoirParams &params) {
    params.validate();
    const double ratio = params.gamma0 / params.lambda;
    return Regime{ratio <= 0.5 ? RegimeKind::Markovian : RegimeKind::NonMarkovian, ratio};
}

double decay_amplitude(const ReservoirParams &params, double t) {
    params.validate();
    if (!(t >= 0.0)) throw DomainError("decay_amplitude: time must be non-negative");
    if (t == 0.0) return 1.0;
    const double n = params.n_qubits;
    const double nyq = 2.0 * n * params.gamma0 * params.lambda;
    const double s = bracket(params.lambda, params.discriminant(), t, nyq);
    return (n - 1.0) / n + s / n;
}

double asymptotic_amplitude(const ReservoirParams &params) {
    if (classify_regime(params).kind != RegimeKind::Markovian) {
        throw RegimeError("asymptotic_amplitude: defined only in the Markovian regime");
    }
    const double n = params.n_qubits;
    return (n - 1.0) / n;
}

AmplitudeTrajectory closed_form_trajectory(const ReservoirParams &params, std::span<const double> gamma0_t) {
    validate_grid(gamma0_t);
    AmplitudeTrajectory out;
    out.gamma0_t.assign(gamma0_t.begin(), gamma0_t.end());
    out.amplitudes.reserve(gamma0_t.size());
    for (double gt : gamma0_t) out.amplitudes.push_back(decay_amplitude(params, gt / params.gamma0));
    return out;
}

AmplitudeTrajectory kernel_ode_oracle(const ReservoirParams &params, std::span<const double> gamma0_t,
                                      const KernelOdeOptions &options) {
    params.validate();
    validate_grid(gamma0_t);
    if (!(options.step_gamma0 > 0.0)) throw DomainError("kernel_ode_oracle: step must be positive");

    const double n = params.n_qubits;
    const double lambda = params.lambda;
    const double feed = 0.5 * params.gamma0 * lambda;
    const double max_h = options.step_gamma0 / params.gamma0;

    auto rhs = [&](double s, double z, double &ds, double &dz) {
        ds = -n * z;
        dz = feed * s - lambda * z;
    };

    AmplitudeTrajectory out;
    out.gamma0_t.assign(gamma0_t.begin(), gamma0_t.end());
    out.amplitudes.reserve(gamma0_t.size());

    double s = 1.0;
    double z = 0.0;
    double t = 0.0;
    for (double gt : gamma0_t) {
        const double target = gt / params.gamma0;
        const double span = target - t;
        if (span > 0.0) {
            const auto steps = static_cast<long>(std::ceil(span / max_h));
            const double h = span / static_cast<double>(steps);
            for (long k = 0; k < steps; ++k) {
                double k1s, k1z, k2s, k2z, k3s, k3z, k4s, k4z;
                rhs(s, z, k1s, k1z);
                rhs(s + 0.5 * h * k1s, z + 0.5 * h * k1z, k2s, k2z);
                rhs(s + 0.5 * h * k2s, z + 0.5 * h * k2z, k3s, k3z);
                rhs(s + h * k3s, z + h * k3z, k4s, k4z);
                s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
                z += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
            }
            t = target;
        }
        out.amplitudes.push_back(t == 0.0 ? 1.0 : (n - 1.0) / n + s / n);
    }
    return out;
}

double ModeGrid::coupling_weight() const {
    double w = 0.0;
    for (double g : couplings) w += g * g;
    return w;
}

double lorentzian_weight(const ReservoirParams &params, double window) {
    return params.gamma0 * params.lambda / std::numbers::pi * std::atan(window / params.lambda);
}

ModeGrid make_mode_grid(const ReservoirParams &params, int n_modes, double window_over_lambda) {
    params.validate();
    if (n_modes < 1) throw DomainError("make_mode_grid: need at least one mode");
    if (!(window_over_lambda > 0.0)) throw DomainError("make_mode_grid: window must be positive");

    ModeGrid grid;
    grid.n_modes = n_modes;
    grid.window = window_over_lambda * params.lambda;
    const double dw = 2.0 * grid.window / n_modes;
    const double l2 = params.lambda * params.lambda;
    grid.detunings.reserve(n_modes);
    grid.couplings.reserve(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double delta = -grid.window + dw * (k + 0.5);
        const double j = params.gamma0 * l2 / (2.0 * std::numbers::pi * (delta * delta + l2));
        grid.detunings.push_back(delta);
        grid.couplings.push_back(std::sqrt(j * dw));
    }
    return grid;
}

AmplitudeTrajectory discrete_mode_oracle(const ReservoirParams &params, std::span<const double> gamma0_t,
                                         const ModeGrid &grid, const DiscreteModeOptions &options) {
    params.validate();
    validate_grid(gamma0_t);
    if (grid.n_modes < 1 || grid.detunings.size() != static_cast<std::size_t>(grid.n_modes) ||
        grid.couplings.size() != grid.detunings.size()) {
        throw DomainError("discrete_mode_oracle: malformed mode grid");
    }
    const std::size_t n = static_cast<std::size_t>(params.n_qubits);
    const std::size_t m = grid.detunings.size();

    double max_h = options.step_gamma0 > 0.0 ? options.step_gamma0 : std::min(1e-3, 0.02 * params.gamma0 / grid.window);
    max_h /= params.gamma0;

    // Coupling V = sqrt(N) G (|u><g| + |g><u|) with u the uniform qubit vector
    // and g the normalized coupling vector; exp(-iVh) is a rotation in that
    // plane. Only the uniform qubit component couples, so the qubit register
    // is updated through it.
    const double g_norm = std::sqrt(grid.coupling_weight());
    std::vector<double> g_hat(m);
    for (std::size_t k = 0; k < m; ++k) g_hat[k] = g_norm > 0.0 ? grid.couplings[k] / g_norm : 0.0;
    const double u_hat = 1.0 / std::sqrt(static_cast<double>(n));
    const double omega = std::sqrt(static_cast<double>(n)) * g_norm;

    std::vector<std::complex<double>> qubits(n);
    qubits[0] = 1.0;
    // Mode amplitudes split into real and imaginary parts for the hot loop.
    std::vector<double> mode_re(m, 0.0), mode_im(m, 0.0);
    std::vector<double> half_re(m), half_im(m), full_re(m), full_im(m);

    AmplitudeTrajectory out;
    out.window_warning = grid.window < 10.0 * params.lambda;
    out.gamma0_t.assign(gamma0_t.begin(), gamma0_t.end());
    out.amplitudes.reserve(gamma0_t.size());

    double current_h = -1.0;
    double t = 0.0;
    for (double gt : gamma0_t) {
        const double target = gt / params.gamma0;
        const double span = target - t;
        if (span > 0.0) {
            const auto steps = static_cast<long>(std::ceil(span / max_h));
            const double h = span / static_cast<double>(steps);
            if (h != current_h) {
                for (std::size_t k = 0; k < m; ++k) {
                    half_re[k] = std::cos(0.5 * grid.detunings[k] * h);
                    half_im[k] = -std::sin(0.5 * grid.detunings[k] * h);
                    full_re[k] = std::cos(grid.detunings[k] * h);
                    full_im[k] = -std::sin(grid.detunings[k] * h);
                }
                current_h = h;
            }
            const double cos_t = std::cos(omega * h);
            const double sin_t = std::sin(omega * h);

            // Strang steps H(h/2) V(h) H(h/2); interior half phases merge
            // into full ones. b tracks <g|modes> for the next coupling step.
            double b_re = 0.0, b_im = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double re = mode_re[k] * half_re[k] - mode_im[k] * half_im[k];
                const double im = mode_re[k] * half_im[k] + mode_im[k] * half_re[k];
                mode_re[k] = re;
                mode_im[k] = im;
                b_re += g_hat[k] * re;
                b_im += g_hat[k] * im;
            }
            for (long step = 0; step < steps; ++step) {
                std::complex<double> a{};
                for (const auto &q : qubits) a += u_hat * q;
                const std::complex<double> b{b_re, b_im};
                const std::complex<double> da = (cos_t - 1.0) * a - std::complex<double>(0.0, sin_t) * b;
                const std::complex<double> db = -std::complex<double>(0.0, sin_t) * a + (cos_t - 1.0) * b;
                for (auto &q : qubits) q += da * u_hat;

                const bool last = step + 1 == steps;
                const double *ph_re = last ? half_re.data() : full_re.data();
                const double *ph_im = last ? half_im.data() : full_im.data();
                const double db_re = db.real(), db_im = db.imag();
                b_re = 0.0;
                b_im = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    const double x_re = mode_re[k] + db_re * g_hat[k];
                    const double x_im = mode_im[k] + db_im * g_hat[k];
                    const double re = x_re * ph_re[k] - x_im * ph_im[k];
                    const double im = x_re * ph_im[k] + x_im * ph_re[k];
                    mode_re[k] = re;
                    mode_im[k] = im;
                    b_re += g_hat[k] * re;
                    b_im += g_hat[k] * im;
                }
            }
            t = target;
        }
        double norm = 0.0;
        for (const auto &q : qubits) norm += std::norm(q);
        for (std::size_t k = 0; k < m; ++k) norm += mode_re[k] * mode_re[k] + mode_im[k] * mode_im[k];
        out.max_norm_error = std::max(out.max_norm_error, std::abs(norm - 1.0));
        out.max_imaginary = std::max(out.max_imaginary, std::abs(qubits[0].imag()));
        out.amplitudes.push_back(qubits[0].real());
    }
    return out;
}

}  // namespace eulb
