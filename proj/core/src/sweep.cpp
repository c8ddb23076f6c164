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

#include "eulb/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>

#include "eulb/channel.hpp"
#include "eulb/errors.hpp"
#include "eulb/reservoir.hpp"

#ifndef EULB_VERSION
#define EULB_VERSION "unknown"
#endif

namespace eulb {
namespace {

std::vector<SweepRow> sweep_one(const SweepConfig &config, int n_qubits, const std::vector<double> &grid) {
    const ReservoirParams params{1.0, config.lambda_over_gamma0, n_qubits};
    const TwoQubit initial = config.state == InitialState::MaxEntangled
                                 ? max_entangled_initial()
                                 : bell_diagonal_initial(BellDiagonalParams{config.p});
    const Observable x = pauli_x();
    const Observable z = pauli_z();

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double gt : grid) {
        const double c = decay_amplitude(params, gt);
        const TwoQubit rho = apply_memory_decay(initial, c, config.excited_label);
        rows.push_back(SweepRow{n_qubits, bounds_record(rho, x, z, gt, c)});
    }
    return rows;
}

}  // namespace

const char *library_version() {
    return EULB_VERSION;
}

SweepOutput run_sweep(const SweepConfig &config) {
    config.validate();
    SweepOutput out{config, {}};
    std::sort(out.config.n_qubits_list.begin(), out.config.n_qubits_list.end());
    const std::vector<double> grid = out.config.time_grid();

    std::vector<std::future<std::vector<SweepRow>>> jobs;
    jobs.reserve(out.config.n_qubits_list.size());
    for (int n : out.config.n_qubits_list) {
        jobs.push_back(std::async(std::launch::async, sweep_one, std::cref(out.config), n, std::cref(grid)));
    }
    out.rows.reserve(grid.size() * jobs.size());
    for (auto &job : jobs) {
        auto part = job.get();
        out.rows.insert(out.rows.end(), part.begin(), part.end());
    }
    return out;
}

std::string format_csv_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit_csv(const SweepOutput &out, std::ostream &os) {
    os << "# eulb sweep " << library_version() << '\n';
    const std::string cfg = format_config(out.config);
    std::size_t pos = 0;
    while (pos < cfg.size()) {
        const auto nl = cfg.find('\n', pos);
        os << "# " << cfg.substr(pos, nl - pos) << '\n';
        pos = nl + 1;
    }
    os << "# observables: sigma_x, sigma_z\n";
    os << kCsvHeader << '\n';
    for (const auto &row : out.rows) {
        const BoundsRecord &r = row.record;
        os << row.n_qubits;
        for (double v : {r.gamma0_t, r.amplitude, r.u_left, r.berta, r.adabi, r.delta, r.holevo_q, r.holevo_r,
                         r.mutual_info, r.cond_entropy}) {
            os << ',' << format_csv_number(v);
        }
        os << '\n';
    }
}

void write_csv(const SweepOutput &out, const std::string &path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(path, "cannot open for writing");
    emit_csv(out, os);
    os.flush();
    if (!os) throw IoError(path, "write failed");
}

}  // namespace eulb
