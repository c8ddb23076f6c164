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

// Dense complex linear algebra for one- and two-qubit operators.
//
// Two-qubit operators act on A (x) B with basis order |00>, |01>, |10>, |11>
// (A is the most significant bit). All entropies are in bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace eulb {

using Complex = std::complex<double>;

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-10;
/// Eigenvalues in [-kNegativeEigenvalue, 0) are treated as roundoff and
/// clamped to zero; anything lower is a genuinely invalid state.
inline constexpr double kNegativeEigenvalue = 1e-10;
inline constexpr double kProbabilityClamp = 1e-12;
}  // namespace tolerance

template <std::size_t N>
    requires(N == 2 || N == 4)
class CMatrix {
   public:
    static constexpr std::size_t kDim = N;

    constexpr CMatrix() = default;
    constexpr explicit CMatrix(const std::array<Complex, N * N> &row_major) : data_(row_major) {}

    static constexpr CMatrix identity() {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static constexpr CMatrix diagonal(const std::array<double, N> &d) {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    constexpr Complex &operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
    constexpr const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

    constexpr Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    constexpr CMatrix adjoint() const {
        CMatrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    constexpr CMatrix &operator+=(const CMatrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
        return *this;
    }
    constexpr CMatrix &operator-=(const CMatrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    constexpr CMatrix &operator*=(Complex s) {
        for (auto &z : data_) z *= s;
        return *this;
    }

    friend constexpr CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend constexpr CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend constexpr CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend constexpr CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend constexpr CMatrix operator*(const CMatrix &a, const CMatrix &b) {
        CMatrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) continue;
                for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
            }
        return m;
    }
    friend constexpr bool operator==(const CMatrix &, const CMatrix &) = default;

    constexpr const std::array<Complex, N * N> &data() const { return data_; }

   private:
    std::array<Complex, N * N> data_{};
};

using Mat2 = CMatrix<2>;
using Mat4 = CMatrix<4>;

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const CMatrix<N> &a, const CMatrix<N> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

/// max |m_jk - conj(m_kj)|.
template <std::size_t N>
double hermiticity_error(const CMatrix<N> &m) {
    return max_abs_diff(m, m.adjoint());
}

/// (m + m^dagger) / 2.
template <std::size_t N>
CMatrix<N> hermitian_part(const CMatrix<N> &m) {
    return (m + m.adjoint()) * Complex(0.5);
}

/// Real eigenvalues of a Hermitian matrix, sorted descending.
template <std::size_t N>
struct Spectrum {
    std::array<double, N> eigenvalues{};

    double sum() const {
        double s = 0.0;
        for (double e : eigenvalues) s += e;
        return s;
    }
    double min() const { return eigenvalues.back(); }
};

/// Closed-form quadratic roots. Throws DomainError if `m` is not Hermitian
/// within tolerance::kHermitian.
Spectrum<2> eigenvalues_hermitian(const Mat2 &m);

/// Cyclic complex Jacobi. Converged when the off-diagonal Frobenius norm is
/// at most 1e-13 (relative to max(1, ||m||_F)); throws NumericalError after
/// 100 sweeps.
Spectrum<4> eigenvalues_hermitian(const Mat4 &m);

/// Hermitian, unit-trace, positive-semidefinite matrix. The invariants are
/// checked once at construction and the spectrum is cached.
template <std::size_t N>
    requires(N == 2 || N == 4)
class DensityMatrix {
   public:
    /// Maximally mixed state I/N.
    DensityMatrix();

    /// Throws InvalidStateError (Hermiticity, trace) or PositivityError.
    explicit DensityMatrix(const CMatrix<N> &m);

    const CMatrix<N> &matrix() const noexcept { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const Spectrum<N> &spectrum() const noexcept { return spectrum_; }

    double purity() const;

   private:
    CMatrix<N> m_;
    Spectrum<N> spectrum_;
};

using Qubit = DensityMatrix<2>;
using TwoQubit = DensityMatrix<4>;

/// Kronecker product a (x) b. Inputs need only be square 2x2 (projectors are
/// accepted).
Mat4 tensor_product(const Mat2 &a, const Mat2 &b);
TwoQubit tensor_product(const Qubit &a, const Qubit &b);

enum class Subsystem { A, B };

/// Reduced operator on the subsystem named by `keep`.
Mat2 partial_trace(const Mat4 &m, Subsystem keep);
Qubit partial_trace(const TwoQubit &rho, Subsystem keep);

/// -sum p log2 p with 0 log 0 = 0. Eigenvalues in [-1e-10, 0) are clamped to
/// zero; lower ones throw PositivityError.
double entropy_of_spectrum(std::span<const double> eigenvalues);

template <std::size_t N>
double von_neumann_entropy(const DensityMatrix<N> &rho) {
    return entropy_of_spectrum(rho.spectrum().eigenvalues);
}

/// S_bin(x) = -x log2 x - (1-x) log2 (1-x). Inputs within 1e-12 outside
/// [0, 1] are clamped; beyond that DomainError.
double binary_entropy(double x);

/// -x log2 x for x >= 0, with the 0 limit.
double xlog2x_neg(double x);

}  // namespace eulb
