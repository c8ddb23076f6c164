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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulb/bounds.hpp"
#include "eulb/channel.hpp"
#include "eulb/reports.hpp"
#include "eulb/reservoir.hpp"
#include "eulb/sweep.hpp"
#include "test_util.hpp"

using namespace eulb;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> uniform_grid(double t_max, int points) {
    std::vector<double> g(points);
    for (int k = 0; k < points; ++k) g[k] = t_max * k / (points - 1);
    return g;
}

std::map<int, SweepOutput> &preset_cache() {
    static std::map<int, SweepOutput> cache;
    return cache;
}

const SweepOutput &preset(int fig) {
    auto &cache = preset_cache();
    auto it = cache.find(fig);
    if (it == cache.end()) it = cache.emplace(fig, run_sweep(figure_preset(fig))).first;
    return it->second;
}

std::vector<BoundsRecord> rows_for(const SweepOutput &out, int n) {
    std::vector<BoundsRecord> rows;
    for (const auto &row : out.rows)
        if (row.n_qubits == n) rows.push_back(row.record);
    return rows;
}

Outcome kernel_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const auto grid = uniform_grid(20.0, 20001);
    double worst = 0.0;
    for (int n : {1, 2, 5, 10})
        for (double lam : {0.1, 2.0, 40.0}) {
            const ReservoirParams p{1.0, lam, n};
            const auto ode = kernel_ode_oracle(p, grid);
            for (std::size_t i = 0; i < grid.size(); ++i)
                worst = std::max(worst, std::abs(ode.amplitudes[i] - decay_amplitude(p, grid[i])));
        }
    const double secs = seconds_since(start);
    return {worst <= 1e-6 && secs < 10.0, fmt("max dev %.3e (tol 1e-6), %.2f s (limit 10 s)", worst, secs)};
}

Outcome discrete_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const ReservoirParams p{1.0, 40.0, 1};
    const auto grid = uniform_grid(2.0, 201);
    const auto traj = discrete_mode_oracle(p, grid, make_mode_grid(p, 2000, 20.0));
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(traj.amplitudes[i] - decay_amplitude(p, grid[i])));
    const double secs = seconds_since(start);
    return {worst <= 5e-3 && traj.max_norm_error <= 1e-8 && secs < 60.0,
            fmt("max dev %.3e (tol 5e-3), norm err %.2e (tol 1e-8), %.2f s (limit 60 s)", worst,
                traj.max_norm_error, secs)};
}

Outcome max_entangled_start() {
    double worst = 0.0;
    for (const auto &row : preset(2).rows)
        if (row.record.gamma0_t == 0.0)
            worst = std::max({worst, std::abs(row.record.u_left), std::abs(row.record.berta),
                              std::abs(row.record.adabi)});
    return {worst <= 1e-9, fmt("max |u_left|, |berta|, |adabi| at t=0 = %.3e (tol 1e-9)", worst)};
}

// Brute-force entropies with the Eigen eigensolver, written out from the
// definitions independently of the library's bounds code.
struct BruteForce {
    double u_left, berta, adabi, delta;
};

BruteForce brute_force(const Mat4 &rho) {
    auto trace_a = [](const Mat4 &m) {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out(r, c) = m(r, c) + m(2 + r, 2 + c);
        return out;
    };
    auto trace_b = [](const Mat4 &m) {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out(r, c) = m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1);
        return out;
    };
    const double h = 1.0 / std::sqrt(2.0);
    const std::array<std::array<Complex, 2>, 2> x{{{h, h}, {h, -h}}};
    const std::array<std::array<Complex, 2>, 2> z{{{1.0, 0.0}, {0.0, 1.0}}};
    const double sab = oracle::entropy_oracle(rho);
    const double sa = oracle::entropy_oracle(trace_b(rho));
    const double sb = oracle::entropy_oracle(trace_a(rho));
    double cond[2], holevo[2];
    int k = 0;
    for (const auto &basis : {x, z}) {
        Mat4 post;
        holevo[k] = sb;
        for (const auto &v : basis) {
            Mat2 proj;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) proj(r, c) = v[r] * std::conj(v[c]);
            const Mat4 big = tensor_product(proj, Mat2::identity());
            const Mat4 branch = big * rho * big;
            post = post + branch;
            Mat2 mem = trace_a(branch);
            const double pr = mem.trace().real();
            if (pr > 1e-12) {
                mem *= Complex(1.0 / pr);
                holevo[k] -= pr * oracle::entropy_oracle(mem);
            }
        }
        cond[k] = oracle::entropy_oracle(post) - sb;
        ++k;
    }
    BruteForce b;
    b.u_left = cond[0] + cond[1];
    b.berta = 1.0 + sab - sb;
    b.delta = (sa + sb - sab) - holevo[0] - holevo[1];
    b.adabi = b.berta + std::max(0.0, b.delta);
    return b;
}

Outcome bell_diagonal_start() {
    const BruteForce bf = brute_force(bell_diagonal_initial({0.5}).matrix());
    const bool oracle_agrees = std::abs(bf.berta - 1.5) <= 1e-9 && std::abs(bf.u_left - 1.811278) <= 1e-6 &&
                               std::abs(bf.adabi - 1.811278) <= 1e-6 && std::abs(bf.delta - 0.311278) <= 1e-6;
    bool ok = oracle_agrees;
    double worst = 0.0;
    for (const auto &row : preset(4).rows) {
        if (row.record.gamma0_t != 0.0) continue;
        const auto &r = row.record;
        ok = ok && std::abs(r.berta - 1.5) <= 1e-9 && std::abs(r.u_left - 1.811278) <= 1e-6 &&
             std::abs(r.adabi - 1.811278) <= 1e-6 && std::abs(r.delta - 0.311278) <= 1e-6;
        worst = std::max({worst, std::abs(r.berta - bf.berta), std::abs(r.u_left - bf.u_left),
                          std::abs(r.adabi - bf.adabi), std::abs(r.delta - bf.delta)});
    }
    ok = ok && worst <= 1e-10;
    return {ok, fmt("brute force: berta %.12f u_left %.12f adabi %.12f delta %.12f; library vs brute force %.2e", bf.berta,
                    bf.u_left, bf.adabi, bf.delta, worst)};
}

Outcome markovian_saturation() {
    const auto rows = rows_for(preset(3), 1);
    const BoundsRecord &last = rows.back();
    const bool ok = last.gamma0_t == 20.0 && std::abs(last.adabi - 2.0) <= 1e-3 && std::abs(last.amplitude) <= 1e-4;
    return {ok, fmt("at gamma0 t = %g: adabi %.9f (|.-2| tol 1e-3), C %.3e (tol 1e-4)", last.gamma0_t, last.adabi,
                    last.amplitude)};
}

Outcome inequality_chain() {
    std::mt19937_64 rng(20261015);
    int violations = 0, checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const TwoQubit rho = oracle::random_state<4>(rng, 1 + i % 4);
        violations += !satisfies_inequality_chain(bounds_record(rho, pauli_x(), pauli_z()));
        ++checked;
    }
    for (int fig : {2, 3, 4, 5})
        for (const auto &row : preset(fig).rows) {
            violations += !satisfies_inequality_chain(row.record);
            ++checked;
        }
    return {violations == 0, fmt("%d violations in %d records (slack 1e-9)", violations, checked)};
}

Outcome channel_vs_closed_form() {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double c = -1.0 + 2.0 * k / 99.0;
        const TwoQubit evolved = apply_memory_decay(max_entangled_initial(), c);
        worst = std::max(worst, max_abs_diff(evolved.matrix(), evolved_max_entangled_closed_form(c).matrix()));
    }
    return {worst <= 1e-15, fmt("max entrywise dev %.3e over 100 amplitudes (tol 1e-15)", worst)};
}

Outcome closed_form_audit() {
    const DiscrepancyReport rep = discrepancy_report(0.5);
    bool ok = true;
    std::string detail;
    for (const char *name : {"max_entangled.post_x_entropy", "max_entangled.post_z_entropy", "max_entangled.adabi",
                             "max_entangled.delta"}) {
        ok = ok && rep.audit(name).max_deviation <= 1e-9;
    }
    const FormulaAudit &left = rep.audit("max_entangled.uncertainty_left");
    double sbin_err = 0.0;
    for (std::size_t i = 0; i < rep.c_grid.size(); ++i) {
        const double x = rep.c_grid[i] * rep.c_grid[i] / 2;
        const double sbin = x <= 0.0 ? 0.0 : -x * std::log2(x) - (1 - x) * std::log2(1 - x);
        sbin_err = std::max(sbin_err, std::abs(left.deviations[i] - sbin));
    }
    ok = ok && left.flagged() && sbin_err <= 1e-9;
    const FormulaAudit &matrix = rep.audit("bell_diagonal.evolved_matrix");
    ok = ok && matrix.flagged() && matrix.deviations.back() >= 0.125;
    const FormulaAudit &bell_left = rep.audit("bell_diagonal.uncertainty_left");
    ok = ok && bell_left.flagged() && std::abs(bell_left.deviations.back() - 0.375) <= 1e-6;
    detail = fmt("consistent rows ok; left-side vs S_bin(c^2/2) %.2e; evolved matrix dev at c=1 %.4f; "
                 "Bell-diagonal left side dev at c=1 %.7f",
                 sbin_err, matrix.deviations.back(), bell_left.deviations.back());
    return {ok, detail};
}

Outcome protection_by_n() {
    bool ok = true;
    std::string detail;
    for (int fig : {2, 3, 4, 5}) {
        std::vector<double> means;
        for (int n : {1, 2, 5, 10}) {
            const auto rows = rows_for(preset(fig), n);
            double sum = 0.0;
            for (const auto &r : rows) sum += r.adabi;
            means.push_back(sum / rows.size());
        }
        for (std::size_t i = 1; i < means.size(); ++i) ok = ok && means[i] < means[i - 1];
        detail += fmt("fig %d [%.4f %.4f %.4f %.4f] ", fig, means[0], means[1], means[2], means[3]);
    }
    return {ok, detail};
}

Outcome revival() {
    const auto nm = rows_for(preset(2), 1);
    // A decrease means a drop over a contiguous stretch, not only one step.
    double run_max = nm.front().adabi, largest_decrease = 0.0;
    for (const auto &r : nm) {
        run_max = std::max(run_max, r.adabi);
        largest_decrease = std::max(largest_decrease, run_max - r.adabi);
    }
    const auto mk = rows_for(preset(3), 1);
    double worst_dip = 0.0;
    for (std::size_t i = 1; i < mk.size(); ++i) worst_dip = std::max(worst_dip, mk[i - 1].adabi - mk[i].adabi);
    const bool ok = largest_decrease > 0.01 && worst_dip <= 1e-9;
    return {ok, fmt("non-Markovian largest decrease %.4f (> 0.01); Markovian worst step dip %.2e (tol 1e-9)",
                    largest_decrease, worst_dip)};
}

Outcome determinism() {
    const std::filesystem::path dir(EULB_SCRATCH_DIR);
    const auto a = dir / "acceptance_fig2_a.csv";
    const auto b = dir / "acceptance_fig2_b.csv";
    for (const auto &path : {a, b}) {
        const std::string cmd = std::string("\"") + EULB_CLI_PATH + "\" sweep --fig 2 --out \"" + path.string() + "\"";
        if (std::system(cmd.c_str()) != 0) return {false, "sweep command failed: " + cmd};
    }
    auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string first = slurp(a), second = slurp(b);
    const bool ok = !first.empty() && first == second;
    return {ok, fmt("%zu bytes vs %zu bytes, %s", first.size(), second.size(), ok ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"closed form vs kernel ODE oracle", kernel_oracle},
        {"discrete-mode oracle", discrete_oracle},
        {"t=0 exactness, maximally entangled", max_entangled_start},
        {"t=0 values, Bell diagonal p=1/2", bell_diagonal_start},
        {"Markovian saturation", markovian_saturation},
        {"inequality chain", inequality_chain},
        {"channel vs evolved-state formula", channel_vs_closed_form},
        {"closed-form audit", closed_form_audit},
        {"protection by N", protection_by_n},
        {"non-Markovian revival", revival},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
