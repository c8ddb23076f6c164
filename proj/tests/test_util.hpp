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

// Shared generators and oracles for the test suites. The oracles here do not
// go through the library's eigensolver or amplitude code.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "eulb/linalg.hpp"
#include "eulb/reservoir.hpp"

namespace eulb::oracle {

template <std::size_t N>
CMatrix<N> ginibre(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CMatrix<N> g;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    return g;
}

/// Random full-rank or rank-deficient state: G G^dagger / tr with G having
/// `rank` nonzero columns.
template <std::size_t N>
DensityMatrix<N> random_state(std::mt19937_64 &rng, std::size_t rank = N) {
    CMatrix<N> g = ginibre<N>(rng);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = rank; c < N; ++c) g(r, c) = 0.0;
    CMatrix<N> m = g * g.adjoint();
    m = hermitian_part(m);
    m *= Complex(1.0 / m.trace().real());
    return DensityMatrix<N>(m);
}

/// Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
template <std::size_t N>
CMatrix<N> random_unitary(std::mt19937_64 &rng) {
    CMatrix<N> g = ginibre<N>(rng);
    CMatrix<N> q;
    for (std::size_t c = 0; c < N; ++c) {
        std::array<Complex, N> v;
        for (std::size_t r = 0; r < N; ++r) v[r] = g(r, c);
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex dot = 0.0;
            for (std::size_t r = 0; r < N; ++r) dot += std::conj(q(r, prev)) * v[r];
            for (std::size_t r = 0; r < N; ++r) v[r] -= dot * q(r, prev);
        }
        double norm = 0.0;
        for (auto &z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < N; ++r) q(r, c) = v[r] / norm;
    }
    return q;
}

template <std::size_t N>
std::vector<double> eigen_oracle(const CMatrix<N> &m) {
    Eigen::Matrix<std::complex<double>, N, N> e;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) e(r, c) = m(r, c);
    Eigen::SelfAdjointEigenSolver<decltype(e)> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + N);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Entropy in bits via the Eigen eigensolver.
template <std::size_t N>
double entropy_oracle(const CMatrix<N> &m) {
    double s = 0.0;
    for (double e : eigen_oracle(m))
        if (e > 0.0) s -= e * std::log2(e);
    return s;
}

/// The decay amplitude written literally with complex D; no branches.
inline double literal_amplitude(const ReservoirParams &p, double t) {
    const double n = p.n_qubits;
    const std::complex<double> d = std::sqrt(std::complex<double>(p.lambda * p.lambda - 2.0 * n * p.gamma0 * p.lambda));
    const std::complex<double> br = std::cosh(d * t / 2.0) + p.lambda / d * std::sinh(d * t / 2.0);
    return ((n - 1.0) / n + std::exp(-p.lambda * t / 2.0) / n * br).real();
}

}  // namespace eulb::oracle
