// Copyright 2026 The mptrotter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "mpt/lcu.hpp"
#include "mpt/trotter.hpp"

namespace mpt {

namespace {

using nlohmann::json;

constexpr double kDistributionTol = 1e-9;
constexpr const char* kCsvHeader =
    "t,algo,p00,p01,p10,p11,success_prob,state_error,fidelity";

std::string join_iterations(const MpSchedule& schedule) {
  std::string out;
  for (std::size_t q = 0; q < schedule.iterations().size(); ++q) {
    if (q) out += '-';
    out += std::to_string(schedule.iterations()[q]);
  }
  return out;
}

std::vector<double> populations(const StateVector& state) {
  std::vector<double> p(static_cast<std::size_t>(state.size()));
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    p[static_cast<std::size_t>(i)] = std::norm(state(i));
  }
  return p;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

Complex parse_complex(const json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw std::invalid_argument("config: complex numbers are [re, im] pairs, got " +
                              value.dump());
}

double number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number()) {
    throw std::invalid_argument(std::string("config: '") + key + "' must be a number");
  }
  return doc[key].get<double>();
}

}  // namespace

Algorithm Algorithm::parse(std::string_view text, int oaa_iterations) {
  Algorithm algo;
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "exact" && colon == std::string_view::npos) {
    algo.kind = AlgorithmKind::kExact;
  } else if (name == "trotter") {
    algo.kind = AlgorithmKind::kTrotter;
    const std::string digits(rest);
    std::size_t used = 0;
    long long steps = 0;
    try {
      steps = std::stoll(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size() || steps < 1) {
      throw std::invalid_argument("algorithm: 'trotter:<l>' needs a positive integer, got '" +
                                  std::string(text) + "'");
    }
    algo.trotter_steps = steps;
  } else if (name == "mp" || name == "mp_oaa") {
    algo.kind = name == "mp" ? AlgorithmKind::kMultiProduct
                             : AlgorithmKind::kMultiProductOaa;
    algo.schedule = parse_schedule(rest);
    if (oaa_iterations < 0) {
      throw std::invalid_argument("algorithm: OAA iteration count must be >= 0");
    }
    algo.oaa_iterations = oaa_iterations;
  } else {
    throw std::invalid_argument("algorithm: unknown '" + std::string(text) +
                                "' (expected exact, trotter:<l>, mp:<schedule>, "
                                "mp_oaa:<schedule>)");
  }
  return algo;
}

std::string Algorithm::label() const {
  switch (kind) {
    case AlgorithmKind::kExact:
      return "exact";
    case AlgorithmKind::kTrotter:
      return "trotter_" + std::to_string(trotter_steps);
    case AlgorithmKind::kMultiProduct:
      return "mp_" + join_iterations(*schedule);
    case AlgorithmKind::kMultiProductOaa:
      return "mp_oaa_" + join_iterations(*schedule) + "_N" +
             std::to_string(oaa_iterations);
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw std::invalid_argument("format: expected csv or json, got '" +
                              std::string(text) + "'");
}

SweepConfig SweepConfig::default_experiment() {
  SweepConfig config;
  config.initial_state = StateVector::Zero(4);
  config.initial_state(0) = std::sqrt(0.3);
  config.initial_state(1) = std::sqrt(0.7);
  for (int i = 0; i <= 60; ++i) config.t_grid.push_back(static_cast<double>(i));
  for (const char* name : {"exact", "trotter:96", "mp:1,2,3,96",
                           "mp:modified:2,4", "mp_oaa:modified:2,4"}) {
    config.algorithms.push_back(Algorithm::parse(name, config.oaa_iterations));
  }
  return config;
}

void SweepConfig::validate() const {
  if (initial_state.size() != 4) {
    throw std::invalid_argument("config: initial_state must have 4 amplitudes");
  }
  if (!(std::abs(initial_state.squaredNorm() - 1.0) <= kDistributionTol)) {
    std::ostringstream msg;
    msg << "config: initial_state is not normalized (norm^2 = "
        << initial_state.squaredNorm() << ")";
    throw std::invalid_argument(msg.str());
  }
  if (t_grid.empty()) throw std::invalid_argument("config: empty t grid");
  for (double t : t_grid) {
    if (!std::isfinite(t)) throw std::invalid_argument("config: non-finite t in grid");
  }
  if (algorithms.empty()) throw std::invalid_argument("config: no algorithms listed");
}

SweepConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");

  SweepConfig config = SweepConfig::default_experiment();
  config.model.omega = number(doc, "omega", config.model.omega);
  config.model.delta = number(doc, "delta", config.model.delta);
  config.model.e1 = number(doc, "e1", config.model.e1);
  config.model.e2 = number(doc, "e2", config.model.e2);

  if (doc.contains("initial_state")) {
    const json& amps = doc["initial_state"];
    if (!amps.is_array()) {
      throw std::invalid_argument("config: initial_state must be an array");
    }
    config.initial_state.resize(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
      config.initial_state(static_cast<Eigen::Index>(i)) = parse_complex(amps[i]);
    }
  }

  if (doc.contains("t_grid")) {
    if (!doc["t_grid"].is_array()) {
      throw std::invalid_argument("config: t_grid must be an array");
    }
    config.t_grid.clear();
    for (const json& t : doc["t_grid"]) {
      if (!t.is_number()) throw std::invalid_argument("config: t_grid entries must be numbers");
      config.t_grid.push_back(t.get<double>());
    }
  } else if (doc.contains("t_min") || doc.contains("t_max") ||
             doc.contains("t_points")) {
    const double lo = number(doc, "t_min", 0.0);
    const double hi = number(doc, "t_max", 60.0);
    const double points = number(doc, "t_points", 61.0);
    if (!(points >= 1.0) || points != std::floor(points)) {
      throw std::invalid_argument("config: t_points must be a positive integer");
    }
    const auto n = static_cast<int>(points);
    config.t_grid.clear();
    for (int i = 0; i < n; ++i) {
      config.t_grid.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    }
  }

  if (doc.contains("oaa_iterations")) {
    const double n = number(doc, "oaa_iterations", 1.0);
    if (!(n >= 0.0) || n != std::floor(n)) {
      throw std::invalid_argument("config: oaa_iterations must be a nonnegative integer");
    }
    config.oaa_iterations = static_cast<int>(n);
  }
  if (doc.contains("threads")) {
    const double n = number(doc, "threads", 0.0);
    if (!(n >= 0.0) || n != std::floor(n)) {
      throw std::invalid_argument("config: threads must be a nonnegative integer");
    }
    config.threads = static_cast<unsigned>(n);
  }
  if (doc.contains("algorithms")) {
    if (!doc["algorithms"].is_array()) {
      throw std::invalid_argument("config: algorithms must be an array of strings");
    }
    config.algorithms.clear();
    for (const json& name : doc["algorithms"]) {
      if (!name.is_string()) {
        throw std::invalid_argument("config: algorithms must be an array of strings");
      }
      config.algorithms.push_back(
          Algorithm::parse(name.get<std::string>(), config.oaa_iterations));
    }
  } else {
    for (Algorithm& algo : config.algorithms) algo.oaa_iterations = config.oaa_iterations;
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw std::invalid_argument("config: output must be a string");
    config.output_path = doc["output"].get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) throw std::invalid_argument("config: format must be a string");
    config.format = parse_format(doc["format"].get<std::string>());
  }
  config.validate();
  return config;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

double classical_fidelity(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("classical_fidelity: distributions must be nonempty and equal length");
  }
  auto check = [](std::span<const double> dist, const char* name) {
    double sum = 0.0;
    for (double x : dist) {
      if (!(x >= 0.0)) {
        throw std::invalid_argument(std::string("classical_fidelity: negative entry in ") + name);
      }
      sum += x;
    }
    if (!(std::abs(sum - 1.0) <= kDistributionTol)) {
      std::ostringstream msg;
      msg << "classical_fidelity: " << name << " sums to " << sum;
      throw std::invalid_argument(msg.str());
    }
  };
  check(p, "p");
  check(q, "q");
  double overlap = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) overlap += std::sqrt(p[i] * q[i]);
  return std::min(overlap * overlap, 1.0);
}

std::vector<SweepRow> evolve(const SweepConfig& config, double t) {
  const HamiltonianDecomposition decomp = build_spin_hamiltonian(config.model);
  const StateVector& psi0 = config.initial_state;
  const StateVector exact = hermitian_propagator(total(decomp), t) * psi0;
  const std::vector<double> exact_populations = populations(exact);

  std::vector<SweepRow> rows;
  rows.reserve(config.algorithms.size());
  for (const Algorithm& algo : config.algorithms) {
    SweepRow row;
    row.t = t;
    row.algo = algo.label();
    StateVector out;
    switch (algo.kind) {
      case AlgorithmKind::kExact:
        out = exact;
        break;
      case AlgorithmKind::kTrotter:
        out = trotterize(decomp, t, algo.trotter_steps) * psi0;
        out /= out.norm();
        break;
      case AlgorithmKind::kMultiProduct:
      case AlgorithmKind::kMultiProductOaa: {
        const MpSchedule& schedule = *algo.schedule;
        std::vector<Operator> branches;
        for (std::int64_t l : schedule.iterations()) {
          branches.push_back(trotterize(decomp, t, l));
        }
        const LcuCircuit circuit = build_lcu(schedule.coefficients(), std::move(branches));
        const LcuOutcome outcome =
            algo.kind == AlgorithmKind::kMultiProduct
                ? apply_lcu(circuit, psi0)
                : apply_oaa(circuit, psi0, algo.oaa_iterations);
        row.success_probability = outcome.success_probability;
        row.degenerate = outcome.degenerate;
        out = outcome.renormalized_state;
        break;
      }
    }
    if (row.degenerate) {
      row.state_error = std::numeric_limits<double>::quiet_NaN();
      row.classical_fidelity = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.populations = populations(out);
      row.state_error = (exact - out).norm();
      row.classical_fidelity = classical_fidelity(exact_populations, row.populations);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<double> times = config.t_grid;
  std::stable_sort(times.begin(), times.end());

  std::vector<std::vector<SweepRow>> per_time(times.size());
  unsigned workers = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(times.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < times.size() && !failed; i = next++) {
      try {
        per_time[i] = evolve(config, times[i]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  rows.reserve(times.size() * config.algorithms.size());
  for (auto& block : per_time) {
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

double fit_order(std::span<const double> t_grid, std::span<const double> errors) {
  if (t_grid.size() != errors.size()) {
    throw std::invalid_argument("fit_order: t grid and errors differ in length");
  }
  if (t_grid.size() < 4) throw std::invalid_argument("fit_order: need at least 4 points");
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw std::invalid_argument("fit_order: t must be positive and strictly ascending");
    }
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
      throw std::invalid_argument("fit_order: errors must be positive and finite");
    }
    sx += std::log(t_grid[i]);
    sy += std::log(errors[i]);
  }
  const double n = static_cast<double>(t_grid.size());
  const double mx = sx / n;
  const double my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double dx = std::log(t_grid[i]) - mx;
    sxy += dx * (std::log(errors[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void emit(std::span<const SweepRow> rows, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const SweepRow& row : rows) {
      out << format_real(row.t) << ',' << row.algo;
      if (row.degenerate) {
        out << ",,,,";
      } else {
        if (row.populations.size() != 4) {
          throw std::invalid_argument("emit: rows must carry 4 populations");
        }
        for (double p : row.populations) out << ',' << format_real(p);
      }
      out << ',' << format_real(row.success_probability);
      if (row.degenerate) {
        out << ",,";
      } else {
        out << ',' << format_real(row.state_error) << ','
            << format_real(row.classical_fidelity);
      }
      out << '\n';
    }
    return;
  }

  // ordered_json keeps the CSV column order.
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json item;
    item["t"] = row.t;
    item["algo"] = row.algo;
    static constexpr const char* kPopulationKeys[] = {"p00", "p01", "p10", "p11"};
    for (std::size_t i = 0; i < 4; ++i) {
      if (row.degenerate) {
        item[kPopulationKeys[i]] = nullptr;
      } else {
        if (row.populations.size() != 4) {
          throw std::invalid_argument("emit: rows must carry 4 populations");
        }
        item[kPopulationKeys[i]] = row.populations[i];
      }
    }
    item["success_prob"] = row.success_probability;
    if (row.degenerate) {
      item["state_error"] = nullptr;
      item["fidelity"] = nullptr;
    } else {
      item["state_error"] = row.state_error;
      item["fidelity"] = row.classical_fidelity;
    }
    doc.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

void emit(std::span<const SweepRow> rows, OutputFormat format,
          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("emit: cannot write " + path.string());
  emit(rows, format, static_cast<std::ostream&>(out));
  out.flush();
  if (!out) throw std::runtime_error("emit: write failed for " + path.string());
}

}  // namespace mpt
