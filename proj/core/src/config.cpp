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

#include "eulb/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "eulb/errors.hpp"

namespace eulb {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view v, int line, std::string_view key) {
    double out = 0.0;
    const auto *end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (v.empty() || res.ec != std::errc() || res.ptr != end) {
        throw ParseError(line, "expected a number for '" + std::string(key) + "', got '" + std::string(v) + "'");
    }
    return out;
}

int parse_int(std::string_view v, int line, std::string_view key) {
    int out = 0;
    const auto *end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (v.empty() || res.ec != std::errc() || res.ptr != end) {
        throw ParseError(line, "expected an integer for '" + std::string(key) + "', got '" + std::string(v) + "'");
    }
    return out;
}

// Shortest of %.15g..%.17g that reads back to the same double.
std::string format_double(double v) {
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace

std::string_view to_string(InitialState s) {
    return s == InitialState::MaxEntangled ? "max_entangled" : "bell_diagonal";
}

void SweepConfig::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p", "must lie in [0, 1]");
    if (!(lambda_over_gamma0 > 0.0) || !std::isfinite(lambda_over_gamma0)) {
        throw ValidationError("lambda_over_gamma0", "must be positive and finite");
    }
    if (n_qubits_list.empty()) throw ValidationError("n_qubits_list", "must not be empty");
    std::set<int> seen;
    for (int n : n_qubits_list) {
        if (n < 1) throw ValidationError("n_qubits_list", "entries must be at least 1");
        if (!seen.insert(n).second) throw ValidationError("n_qubits_list", "duplicate entry " + std::to_string(n));
    }
    if (!(t_max_gamma0 > 0.0) || !std::isfinite(t_max_gamma0)) {
        throw ValidationError("t_max_gamma0", "must be positive and finite");
    }
    if (steps < 2) throw ValidationError("steps", "must be at least 2");
}

std::vector<double> SweepConfig::time_grid() const {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double denom = static_cast<double>(steps - 1);
    for (int k = 0; k < steps; ++k) grid[k] = t_max_gamma0 * (static_cast<double>(k) / denom);
    grid.back() = t_max_gamma0;
    return grid;
}

SweepConfig parse_config(std::string_view text) {
    SweepConfig cfg;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view value = trim(line.substr(colon + 1));
        if (key.empty()) throw ParseError(line_no, "missing key");
        if (!seen.emplace(key).second) throw ParseError(line_no, "repeated key '" + std::string(key) + "'");

        if (key == "state") {
            if (value == "max_entangled") {
                cfg.state = InitialState::MaxEntangled;
            } else if (value == "bell_diagonal") {
                cfg.state = InitialState::BellDiagonal;
            } else {
                throw ValidationError("state", "expected max_entangled or bell_diagonal, got '" + std::string(value) + "'");
            }
        } else if (key == "p") {
            cfg.p = parse_double(value, line_no, key);
        } else if (key == "lambda_over_gamma0") {
            cfg.lambda_over_gamma0 = parse_double(value, line_no, key);
        } else if (key == "n_qubits_list") {
            cfg.n_qubits_list.clear();
            std::size_t start = 0;
            while (start <= value.size()) {
                const auto comma = value.find(',', start);
                const auto item =
                    trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
                cfg.n_qubits_list.push_back(parse_int(item, line_no, key));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        } else if (key == "t_max_gamma0") {
            cfg.t_max_gamma0 = parse_double(value, line_no, key);
        } else if (key == "steps") {
            cfg.steps = parse_int(value, line_no, key);
        } else if (key == "excited_label") {
            const int label = parse_int(value, line_no, key);
            if (label != 0 && label != 1) throw ValidationError("excited_label", "must be 0 or 1");
            cfg.excited_label = static_cast<ExcitedLabel>(label);
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open configuration file");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(path, "read failed");
    return parse_config(buf.str());
}

std::string format_config(const SweepConfig &config) {
    std::string out;
    out += "state: " + std::string(to_string(config.state)) + "\n";
    out += "p: " + format_double(config.p) + "\n";
    out += "lambda_over_gamma0: " + format_double(config.lambda_over_gamma0) + "\n";
    out += "n_qubits_list: ";
    for (std::size_t i = 0; i < config.n_qubits_list.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(config.n_qubits_list[i]);
    }
    out += "\n";
    out += "t_max_gamma0: " + format_double(config.t_max_gamma0) + "\n";
    out += "steps: " + std::to_string(config.steps) + "\n";
    out += "excited_label: " + std::to_string(static_cast<int>(config.excited_label)) + "\n";
    return out;
}

SweepConfig figure_preset(int fig) {
    SweepConfig cfg;
    switch (fig) {
        case 2:
            cfg.state = InitialState::MaxEntangled;
            cfg.lambda_over_gamma0 = 0.1;
            break;
        case 3:
            cfg.state = InitialState::MaxEntangled;
            cfg.lambda_over_gamma0 = 40.0;
            break;
        case 4:
            cfg.state = InitialState::BellDiagonal;
            cfg.lambda_over_gamma0 = 0.1;
            break;
        case 5:
            cfg.state = InitialState::BellDiagonal;
            cfg.lambda_over_gamma0 = 40.0;
            break;
        default:
            throw DomainError("figure_preset: no preset for figure " + std::to_string(fig) + " (expected 2, 3, 4 or 5)");
    }
    cfg.p = 0.5;
    return cfg;
}

}  // namespace eulb
