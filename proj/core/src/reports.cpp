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

#include "eulb/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eulb/channel.hpp"
#include "eulb/closed_form.hpp"
#include "eulb/errors.hpp"
#include "eulb/reservoir.hpp"

namespace eulb {
namespace {

constexpr int kAuditPoints = 101;

double max_deviation(const AmplitudeTrajectory &a, const AmplitudeTrajectory &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return m;
}

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

void record(FormulaAudit &audit, double c, double dev, std::string where = {}) {
    if (audit.deviations.empty() || dev > audit.max_deviation) {
        audit.max_deviation = dev;
        audit.at_c = c;
        audit.where = std::move(where);
    }
    audit.deviations.push_back(dev);
}

}  // namespace

bool OracleReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [&](const OracleEntry &e) {
        if (!(e.kernel_max_deviation <= options.kernel_tolerance)) return false;
        if (e.discrete_max_deviation) {
            return *e.discrete_max_deviation <= options.discrete_tolerance &&
                   e.discrete_norm_error <= options.norm_tolerance;
        }
        return true;
    });
}

OracleReport oracle_report(const SweepConfig &config, const OracleOptions &options) {
    config.validate();
    OracleReport report{config, options, {}};
    std::sort(report.config.n_qubits_list.begin(), report.config.n_qubits_list.end());
    const std::vector<double> grid = report.config.time_grid();

    for (int n : report.config.n_qubits_list) {
        const ReservoirParams params{1.0, config.lambda_over_gamma0, n};
        const AmplitudeTrajectory closed = closed_form_trajectory(params, grid);
        OracleEntry entry;
        entry.n_qubits = n;
        entry.kernel_max_deviation = max_deviation(closed, kernel_ode_oracle(params, grid));
        if (options.discrete_modes) {
            const ModeGrid modes = make_mode_grid(params, *options.discrete_modes, options.window_over_lambda);
            const AmplitudeTrajectory brute = discrete_mode_oracle(params, grid, modes);
            entry.discrete_max_deviation = max_deviation(closed, brute);
            entry.discrete_norm_error = brute.max_norm_error;
            entry.window_warning = brute.window_warning;
        }
        report.entries.push_back(entry);
    }
    return report;
}

std::string format_oracle_report(const OracleReport &report) {
    std::string out;
    out += "decay amplitude vs oracles: lambda/gamma0 = " +
           fmt("%g", report.config.lambda_over_gamma0) + ", gamma0*t in [0, " +
           fmt("%g", report.config.t_max_gamma0) + "], " + std::to_string(report.config.steps) + " points\n";
    for (const auto &e : report.entries) {
        out += "N=" + std::to_string(e.n_qubits) + "  kernel_ode max|dC| = " + fmt("%.3e", e.kernel_max_deviation);
        out += e.kernel_max_deviation <= report.options.kernel_tolerance ? " ok" : " FAIL";
        if (e.discrete_max_deviation) {
            out += "  discrete_modes max|dC| = " + fmt("%.3e", *e.discrete_max_deviation);
            out += " norm err = " + fmt("%.3e", e.discrete_norm_error);
            const bool ok = *e.discrete_max_deviation <= report.options.discrete_tolerance &&
                            e.discrete_norm_error <= report.options.norm_tolerance;
            out += ok ? " ok" : " FAIL";
            if (e.window_warning) out += " (warning: window < 10 lambda)";
        }
        out += '\n';
    }
    out += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + " (kernel tol " +
           fmt("%g", report.options.kernel_tolerance);
    if (report.options.discrete_modes) out += ", discrete tol " + fmt("%g", report.options.discrete_tolerance);
    out += ")\n";
    return out;
}

const FormulaAudit &DiscrepancyReport::audit(const std::string &name) const {
    auto it = std::find_if(audits.begin(), audits.end(), [&](const FormulaAudit &a) { return a.name == name; });
    if (it == audits.end()) throw std::out_of_range("discrepancy report has no entry '" + name + "'");
    return *it;
}

DiscrepancyReport discrepancy_report(double p) {
    BellDiagonalParams{p}.validate();
    DiscrepancyReport report;
    report.p = p;
    for (int k = 0; k < kAuditPoints; ++k) report.c_grid.push_back(static_cast<double>(k) / (kAuditPoints - 1));

    const TwoQubit bd0 = bell_diagonal_initial(BellDiagonalParams{p});
    FormulaAudit matrix_audit{"bell_diagonal.evolved_matrix", {}, 0.0, 0.0, {}};
    for (double c : report.c_grid) {
        const ClosedFormReport cf = closed_form_report(c, p);
        if (report.audits.empty()) {
            for (const auto &row : cf.rows) report.audits.push_back(FormulaAudit{row.name, {}, 0.0, 0.0, {}});
        }
        for (std::size_t i = 0; i < cf.rows.size(); ++i) record(report.audits[i], c, cf.rows[i].deviation);

        const Mat4 reference = evolved_bell_diagonal_reference(p, c).matrix;
        const Mat4 evolved = apply_memory_decay(bd0, c, ExcitedLabel::Zero).matrix();
        double worst = -1.0;
        std::size_t wr = 0, wc = 0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t col = 0; col < 4; ++col) {
                const double d = std::abs(reference(r, col) - evolved(r, col));
                if (d > worst) {
                    worst = d;
                    wr = r;
                    wc = col;
                }
            }
        record(matrix_audit, c, worst, "entry (" + std::to_string(wr + 1) + "," + std::to_string(wc + 1) + ")");
    }
    report.audits.push_back(std::move(matrix_audit));
    return report;
}

std::string format_discrepancy_report(const DiscrepancyReport &report) {
    std::string out = "closed-form audit: p = " + fmt("%g", report.p) + ", " + std::to_string(report.c_grid.size()) +
                      " amplitudes over [0, 1], tolerance " + fmt("%g", kConsistencyTolerance) + "\n";
    for (const auto &a : report.audits) {
        char line[256];
        if (a.flagged()) {
            std::snprintf(line, sizeof line, "%-32s FLAGGED     max dev %.9f at c = %.2f%s%s\n", a.name.c_str(),
                          a.max_deviation, a.at_c, a.where.empty() ? "" : ", ", a.where.c_str());
        } else {
            std::snprintf(line, sizeof line, "%-32s CONSISTENT  max dev %.3e\n", a.name.c_str(), a.max_deviation);
        }
        out += line;
    }
    return out;
}

}  // namespace eulb
