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

#include "eulb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "eulb/errors.hpp"

namespace eulb {
namespace {

constexpr double kJacobiOffDiagonal = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

template <std::size_t N>
void require_hermitian(const CMatrix<N> &m) {
    const double err = hermiticity_error(m);
    if (!(err <= tolerance::kHermitian)) {
        throw DomainError("eigenvalues_hermitian: matrix is not Hermitian (error " + std::to_string(err) + ")");
    }
}

template <std::size_t N>
double off_diagonal_norm(const CMatrix<N> &m) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const CMatrix<N> &m) {
    double s = 0.0;
    for (const auto &z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

Spectrum<2> eigenvalues_hermitian(const Mat2 &m) {
    require_hermitian(m);
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return Spectrum<2>{{mean + half_gap, mean - half_gap}};
}

Spectrum<4> eigenvalues_hermitian(const Mat4 &m) {
    require_hermitian(m);
    Mat4 a = m;
    const double scale = std::max(1.0, frobenius_norm(m));

    int sweep = 0;
    for (; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiOffDiagonal * scale) break;
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = p + 1; q < 4; ++q) {
                const Complex g = a(p, q);
                const double mag = std::abs(g);
                if (mag < 1e-300) continue;

                // Phase the (p, q) element real, then a real Givens rotation.
                const Complex phase = std::conj(g) / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Mat4 u = Mat4::identity();
                u(p, p) = c;
                u(p, q) = s;
                u(q, p) = -s * phase;
                u(q, q) = c * phase;

                a = u.adjoint() * a * u;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < 4; ++i) a(i, i) = a(i, i).real();
            }
        }
    }
    if (sweep == kJacobiMaxSweeps && off_diagonal_norm(a) > kJacobiOffDiagonal * scale) {
        throw NumericalError("eigenvalues_hermitian: Jacobi iteration did not converge");
    }

    Spectrum<4> out;
    for (std::size_t i = 0; i < 4; ++i) out.eigenvalues[i] = a(i, i).real();
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    return out;
}

template <std::size_t N>
    requires(N == 2 || N == 4)
DensityMatrix<N>::DensityMatrix() : m_(CMatrix<N>::identity() * Complex(1.0 / N)) {
    spectrum_.eigenvalues.fill(1.0 / N);
}

template <std::size_t N>
    requires(N == 2 || N == 4)
DensityMatrix<N>::DensityMatrix(const CMatrix<N> &m) : m_(m) {
    for (const auto &z : m.data()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidStateError("density matrix has a non-finite entry");
        }
    }
    const double herm = hermiticity_error(m);
    if (herm > tolerance::kHermitian) {
        throw InvalidStateError("density matrix is not Hermitian (error " + std::to_string(herm) + ")");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > tolerance::kTrace) {
        throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()) + "+" +
                                std::to_string(tr.imag()) + "i, expected 1");
    }
    spectrum_ = eigenvalues_hermitian(m);
    if (spectrum_.min() < -tolerance::kNegativeEigenvalue) {
        throw PositivityError("density matrix has negative eigenvalue " + std::to_string(spectrum_.min()));
    }
}

template <std::size_t N>
    requires(N == 2 || N == 4)
double DensityMatrix<N>::purity() const {
    double s = 0.0;
    for (const auto &z : m_.data()) s += std::norm(z);
    return s;
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

Mat4 tensor_product(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t ar = 0; ar < 2; ++ar)
        for (std::size_t ac = 0; ac < 2; ++ac)
            for (std::size_t br = 0; br < 2; ++br)
                for (std::size_t bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
    return out;
}

TwoQubit tensor_product(const Qubit &a, const Qubit &b) {
    return TwoQubit(tensor_product(a.matrix(), b.matrix()));
}

Mat2 partial_trace(const Mat4 &m, Subsystem keep) {
    Mat2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            if (keep == Subsystem::A) {
                out(r, c) = m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1);
            } else {
                out(r, c) = m(r, c) + m(2 + r, 2 + c);
            }
        }
    }
    return out;
}

Qubit partial_trace(const TwoQubit &rho, Subsystem keep) {
    return Qubit(partial_trace(rho.matrix(), keep));
}

double xlog2x_neg(double x) {
    if (x <= 0.0) return 0.0;
    return -x * std::log2(x);
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double e : eigenvalues) {
        if (e < -tolerance::kNegativeEigenvalue) {
            throw PositivityError("entropy: eigenvalue " + std::to_string(e) + " is negative");
        }
        s += xlog2x_neg(e);
    }
    return s;
}

double binary_entropy(double x) {
    if (!(x >= -tolerance::kProbabilityClamp && x <= 1.0 + tolerance::kProbabilityClamp)) {
        throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    return xlog2x_neg(x) + xlog2x_neg(1.0 - x);
}

}  // namespace eulb
