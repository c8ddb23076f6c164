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

#include "eulb/channel.hpp"

#include <cmath>
#include <string>

#include "eulb/errors.hpp"

namespace eulb {
namespace {

// Projector onto a two-qubit ket given up to the factor 1/sqrt(2); the 1/2
// is applied after the outer product so the entries stay exact.
Mat4 half_outer(const std::array<double, 4> &v) {
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = 0.5 * v[r] * v[c];
    return m;
}

void require_amplitude(double c, const char *who) {
    if (!(std::abs(c) <= 1.0)) {
        throw DomainError(std::string(who) + ": amplitude " + std::to_string(c) + " outside [-1, 1]");
    }
}

}  // namespace

void BellDiagonalParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Bell-diagonal weight p=" + std::to_string(p) + " outside [0, 1]");
}

TwoQubit apply_memory_decay(const TwoQubit &rho, double c, ExcitedLabel excited) {
    if (!(std::abs(c) <= 1.0)) {
        throw ChannelError("apply_memory_decay: |c| = " + std::to_string(std::abs(c)) +
                           " > 1 is not a completely positive map");
    }
    const std::size_t e = static_cast<std::size_t>(excited);
    const std::size_t g = 1 - e;

    Mat2 k0;
    k0(e, e) = c;
    k0(g, g) = 1.0;
    Mat2 k1;
    k1(g, e) = std::sqrt(1.0 - c * c);

    const Mat2 id = Mat2::identity();
    const Mat4 big0 = tensor_product(id, k0);
    const Mat4 big1 = tensor_product(id, k1);
    const Mat4 &m = rho.matrix();
    return TwoQubit(big0 * m * big0.adjoint() + big1 * m * big1.adjoint());
}

TwoQubit max_entangled_initial() {
    return TwoQubit(half_outer({1.0, 0.0, 0.0, 1.0}));
}

TwoQubit bell_diagonal_initial(const BellDiagonalParams &params) {
    params.validate();
    const double p = params.p;
    const Mat4 psi_minus = half_outer({0.0, 1.0, -1.0, 0.0});
    const Mat4 psi_plus = half_outer({0.0, 1.0, 1.0, 0.0});
    const Mat4 phi_plus = half_outer({1.0, 0.0, 0.0, 1.0});
    return TwoQubit(p * psi_minus + (0.5 * (1.0 - p)) * (psi_plus + phi_plus));
}

TwoQubit evolved_max_entangled_closed_form(double c) {
    require_amplitude(c, "evolved_max_entangled_closed_form");
    Mat4 m;
    m(0, 0) = 0.5 * (c * c);
    m(0, 3) = 0.5 * c;
    m(1, 1) = 0.5 * (1.0 - c * c);
    m(3, 0) = 0.5 * c;
    m(3, 3) = 0.5;
    return TwoQubit(m);
}

FlaggedMatrix evolved_bell_diagonal_reference(double p, double c) {
    BellDiagonalParams{p}.validate();
    require_amplitude(c, "evolved_bell_diagonal_reference");
    const double c2 = c * c;
    Mat4 m;
    m(0, 0) = (1.0 + p) / 4.0 * c2;
    m(0, 3) = (1.0 - p) / 2.0 * std::abs(c);
    m(1, 1) = (1.0 - p) / 4.0 + (1.0 + p) / 4.0 * (1.0 - c2);
    m(1, 2) = (1.0 - 3.0 * p) / 2.0 * c;
    m(2, 1) = m(1, 2);
    m(2, 2) = (1.0 - p) / 4.0 * c2;
    m(3, 0) = m(0, 3);
    m(3, 3) = (1.0 + p) / 4.0 + (1.0 - p) / 4.0 * (1.0 - c2);
    return FlaggedMatrix{m, true};
}

}  // namespace eulb
