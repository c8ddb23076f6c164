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

#include "eulb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "eulb/errors.hpp"

namespace eulb {
namespace {

Complex inner(const Ket &a, const Ket &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Mat4 lift_a(const Mat2 &p) {
    return tensor_product(p, Mat2::identity());
}

double entropy_b(const TwoQubit &rho) {
    return von_neumann_entropy(partial_trace(rho, Subsystem::B));
}

double holevo_given(const TwoQubit &rho, const Observable &obs, double s_b) {
    const MeasurementResult m = measure(rho, obs);
    double h = s_b;
    for (std::size_t i = 0; i < 2; ++i) {
        if (!m.zero_probability[i]) h -= m.probabilities[i] * von_neumann_entropy(m.conditional_memory_states[i]);
    }
    return h;
}

}  // namespace

Observable::Observable(std::string name, const Ket &first, const Ket &second)
    : name_(std::move(name)), basis_{first, second} {
    constexpr double tol = 1e-12;
    if (std::abs(inner(first, first) - 1.0) > tol || std::abs(inner(second, second) - 1.0) > tol ||
        std::abs(inner(first, second)) > tol) {
        throw DomainError("observable '" + name_ + "': eigenbasis is not orthonormal");
    }
}

Mat2 Observable::projector(std::size_t i) const {
    const Ket &v = basis_.at(i);
    Mat2 p;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) p(r, c) = v[r] * std::conj(v[c]);
    return p;
}

Observable pauli_x() {
    const double h = std::numbers::sqrt2 / 2.0;
    return Observable("sigma_x", Ket{h, h}, Ket{h, -h});
}

Observable pauli_z() {
    return Observable("sigma_z", Ket{1.0, 0.0}, Ket{0.0, 1.0});
}

Observable rotated_basis(std::string name, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Observable(std::move(name), Ket{c, s}, Ket{-s, c});
}

double complementarity(const Observable &q, const Observable &r) {
    double best = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) best = std::max(best, std::norm(inner(q.eigenvector(i), r.eigenvector(j))));
    return best;
}

TwoQubit post_measurement_state(const TwoQubit &rho, const Observable &obs) {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        const Mat4 p = lift_a(obs.projector(i));
        out += p * rho.matrix() * p;
    }
    return TwoQubit(out);
}

MeasurementResult measure(const TwoQubit &rho, const Observable &obs) {
    MeasurementResult res;
    for (std::size_t i = 0; i < 2; ++i) {
        const Mat4 p = lift_a(obs.projector(i));
        const Mat2 branch = hermitian_part(partial_trace(p * rho.matrix() * p, Subsystem::B));
        const double prob = branch.trace().real();
        res.probabilities[i] = prob;
        if (prob <= kZeroProbability) {
            res.zero_probability[i] = true;
            res.conditional_memory_states[i] = Qubit();
        } else {
            res.conditional_memory_states[i] = Qubit(branch * Complex(1.0 / prob));
        }
    }
    return res;
}

double holevo(const TwoQubit &rho, const Observable &obs) {
    return holevo_given(rho, obs, entropy_b(rho));
}

double mutual_information(const TwoQubit &rho) {
    return von_neumann_entropy(partial_trace(rho, Subsystem::A)) + entropy_b(rho) - von_neumann_entropy(rho);
}

double conditional_entropy(const TwoQubit &rho) {
    return von_neumann_entropy(rho) - entropy_b(rho);
}

double uncertainty_left(const TwoQubit &rho, const Observable &q, const Observable &r) {
    const double s_b = entropy_b(rho);
    return (von_neumann_entropy(post_measurement_state(rho, q)) - s_b) +
           (von_neumann_entropy(post_measurement_state(rho, r)) - s_b);
}

double berta_bound(const TwoQubit &rho, const Observable &q, const Observable &r) {
    return std::log2(1.0 / complementarity(q, r)) + conditional_entropy(rho);
}

AdabiBound adabi_bound(const TwoQubit &rho, const Observable &q, const Observable &r) {
    const double s_b = entropy_b(rho);
    const double delta = mutual_information(rho) - holevo_given(rho, q, s_b) - holevo_given(rho, r, s_b);
    const double berta = berta_bound(rho, q, r);
    return AdabiBound{berta + std::max(0.0, delta), delta};
}

BoundsRecord bounds_record(const TwoQubit &rho, const Observable &q, const Observable &r, double gamma0_t,
                           double amplitude) {
    const double s_ab = von_neumann_entropy(rho);
    const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const double s_b = entropy_b(rho);

    BoundsRecord rec;
    rec.gamma0_t = gamma0_t;
    rec.amplitude = amplitude;
    rec.u_left = (von_neumann_entropy(post_measurement_state(rho, q)) - s_b) +
                 (von_neumann_entropy(post_measurement_state(rho, r)) - s_b);
    rec.cond_entropy = s_ab - s_b;
    rec.mutual_info = s_a + s_b - s_ab;
    rec.holevo_q = holevo_given(rho, q, s_b);
    rec.holevo_r = holevo_given(rho, r, s_b);
    rec.delta = rec.mutual_info - rec.holevo_q - rec.holevo_r;
    rec.berta = std::log2(1.0 / complementarity(q, r)) + rec.cond_entropy;
    rec.adabi = rec.berta + std::max(0.0, rec.delta);
    return rec;
}

bool satisfies_inequality_chain(const BoundsRecord &rec, double slack) {
    return rec.u_left >= rec.adabi - slack && rec.adabi >= rec.berta - slack;
}

}  // namespace eulb
