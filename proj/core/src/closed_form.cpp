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

#include "eulb/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eulb/bounds.hpp"
#include "eulb/channel.hpp"
#include "eulb/errors.hpp"
#include "eulb/linalg.hpp"

namespace eulb {
namespace {

// -coef * log2(arg), zero when coef vanishes.
double weighted_neg_log(double coef, double arg) {
    if (coef <= 0.0) return 0.0;
    return -coef * std::log2(arg);
}

double check_c2(double c) {
    if (!(std::abs(c) <= 1.0)) throw DomainError("closed form: amplitude outside [-1, 1]");
    return c * c;
}

double eta_of(double c2) {
    return std::sqrt(1.0 - c2 + c2 * c2);
}

// The four values (alpha -/+ theta), (alpha -/+ theta) and sum v log2 v.
double alpha_theta_sum(double c) {
    const ClosedFormTerms t = closed_form_terms(c);
    double s = 0.0;
    for (double v : {t.alpha_minus - t.theta, t.alpha_plus - t.theta, t.alpha_minus + t.theta,
                     t.alpha_plus + t.theta}) {
        s -= xlog2x_neg(v);
    }
    return s;
}

}  // namespace

ClosedFormTerms closed_form_terms(double c) {
    const double c2 = check_c2(c);
    const double eta = eta_of(c2);
    return ClosedFormTerms{eta, (2.0 + c2) / 2.0, (2.0 - c2) / 2.0, eta / 4.0};
}

namespace closed_form {

double max_entangled_post_x_entropy(double c) {
    const double eta = eta_of(check_c2(c));
    return weighted_neg_log((1.0 - eta) / 2.0, (1.0 - eta) / 4.0) +
           weighted_neg_log((1.0 + eta) / 2.0, (1.0 + eta) / 4.0);
}

double max_entangled_post_z_entropy(double c) {
    const double c2 = check_c2(c);
    return 0.5 + weighted_neg_log(c2 / 2.0, c2 / 2.0) + weighted_neg_log((1.0 - c2) / 2.0, (1.0 - c2) / 2.0);
}

double max_entangled_uncertainty_left(double c) {
    const double c2 = check_c2(c);
    const double eta = eta_of(c2);
    return 0.5 + weighted_neg_log((1.0 - eta) / 2.0, (1.0 - eta) / 4.0) +
           weighted_neg_log((1.0 + eta) / 2.0, (1.0 + eta) / 4.0) + weighted_neg_log(c2 / 2.0, c2 / 2.0) +
           weighted_neg_log((1.0 - c2) / 2.0, (1.0 - c2) / 2.0) - binary_entropy(c2 / 2.0);
}

double max_entangled_delta(double c) {
    const double c2 = check_c2(c);
    const double eta = eta_of(c2);
    return -0.5 + weighted_neg_log((1.0 - eta) / 2.0, (1.0 - eta) / 4.0) +
           weighted_neg_log((1.0 + eta) / 2.0, (1.0 + eta) / 4.0) + weighted_neg_log(c2 / 2.0, c2 / 2.0) +
           weighted_neg_log((1.0 - c2) / 2.0, (1.0 - c2) / 2.0) - binary_entropy((1.0 - c2) / 2.0) -
           binary_entropy(c2 / 2.0);
}

double max_entangled_adabi(double c) {
    const double c2 = check_c2(c);
    return 1.0 + binary_entropy((1.0 - c2) / 2.0) - binary_entropy(c2 / 2.0) + std::max(0.0, max_entangled_delta(c));
}

double bell_diagonal_post_x_entropy(double c) {
    const double c2 = check_c2(c);
    return weighted_neg_log(c2 / 2.0, c2 / 4.0) + weighted_neg_log((2.0 - c2) / 2.0, (2.0 - c2) / 4.0);
}

double bell_diagonal_post_z_entropy(double c) {
    const double c2 = check_c2(c);
    return xlog2x_neg(c2 / 8.0) + xlog2x_neg(3.0 * c2 / 8.0) + xlog2x_neg((4.0 - 3.0 * c2) / 8.0) +
           xlog2x_neg((4.0 - c2) / 8.0);
}

double bell_diagonal_uncertainty_left(double c) {
    const double c2 = check_c2(c);
    // Three of the four post-z terms, kept as written.
    return bell_diagonal_post_x_entropy(c) + xlog2x_neg(c2 / 8.0) + xlog2x_neg(3.0 * c2 / 8.0) +
           xlog2x_neg((4.0 - c2) / 8.0) - 2.0 * binary_entropy(c2 / 2.0);
}

double bell_diagonal_delta(double c) {
    const double c2 = check_c2(c);
    return alpha_theta_sum(c) - binary_entropy(c2 / 2.0) + bell_diagonal_post_z_entropy(c) +
           bell_diagonal_post_x_entropy(c);
}

double bell_diagonal_adabi(double c) {
    const double c2 = check_c2(c);
    return 1.0 - alpha_theta_sum(c) + std::max(0.0, bell_diagonal_delta(c)) - binary_entropy(c2 / 2.0);
}

}  // namespace closed_form

const FormulaComparison &ClosedFormReport::row(const std::string &name) const {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const FormulaComparison &r) { return r.name == name; });
    if (it == rows.end()) throw std::out_of_range("closed-form report has no row '" + name + "'");
    return *it;
}

ClosedFormReport closed_form_report(double c, double p) {
    check_c2(c);
    ClosedFormReport report{c, p, {}};
    const Observable x = pauli_x();
    const Observable z = pauli_z();

    auto add = [&](std::string name, StateFamily fam, double closed, double def) {
        report.rows.push_back(FormulaComparison{std::move(name), fam, closed, def, std::abs(closed - def)});
    };

    const TwoQubit me = apply_memory_decay(max_entangled_initial(), c, ExcitedLabel::Zero);
    const BoundsRecord me_rec = bounds_record(me, x, z, 0.0, c);
    add("max_entangled.post_x_entropy", StateFamily::MaxEntangled, closed_form::max_entangled_post_x_entropy(c),
        von_neumann_entropy(post_measurement_state(me, x)));
    add("max_entangled.post_z_entropy", StateFamily::MaxEntangled, closed_form::max_entangled_post_z_entropy(c),
        von_neumann_entropy(post_measurement_state(me, z)));
    add("max_entangled.uncertainty_left", StateFamily::MaxEntangled, closed_form::max_entangled_uncertainty_left(c),
        me_rec.u_left);
    add("max_entangled.adabi", StateFamily::MaxEntangled, closed_form::max_entangled_adabi(c), me_rec.adabi);
    add("max_entangled.delta", StateFamily::MaxEntangled, closed_form::max_entangled_delta(c), me_rec.delta);

    const TwoQubit bd = apply_memory_decay(bell_diagonal_initial(BellDiagonalParams{p}), c, ExcitedLabel::Zero);
    const BoundsRecord bd_rec = bounds_record(bd, x, z, 0.0, c);
    add("bell_diagonal.post_x_entropy", StateFamily::BellDiagonal, closed_form::bell_diagonal_post_x_entropy(c),
        von_neumann_entropy(post_measurement_state(bd, x)));
    add("bell_diagonal.post_z_entropy", StateFamily::BellDiagonal, closed_form::bell_diagonal_post_z_entropy(c),
        von_neumann_entropy(post_measurement_state(bd, z)));
    add("bell_diagonal.uncertainty_left", StateFamily::BellDiagonal, closed_form::bell_diagonal_uncertainty_left(c),
        bd_rec.u_left);
    add("bell_diagonal.adabi", StateFamily::BellDiagonal, closed_form::bell_diagonal_adabi(c), bd_rec.adabi);
    add("bell_diagonal.delta", StateFamily::BellDiagonal, closed_form::bell_diagonal_delta(c), bd_rec.delta);
    return report;
}

}  // namespace eulb
