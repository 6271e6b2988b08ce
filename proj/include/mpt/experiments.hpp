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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpt/hamiltonian.hpp"
#include "mpt/linalg.hpp"
#include "mpt/multiproduct.hpp"

namespace mpt {

enum class AlgorithmKind { kExact, kTrotter, kMultiProduct, kMultiProductOaa };

/// One simulated evolution route in a sweep.
struct Algorithm {
  AlgorithmKind kind = AlgorithmKind::kExact;
  std::int64_t trotter_steps = 0;        // kTrotter
  std::optional<MpSchedule> schedule;    // kMultiProduct, kMultiProductOaa
  int oaa_iterations = 1;                // kMultiProductOaa

  /// Parses "exact", "trotter:<l>", "mp:<schedule>", "mp_oaa:<schedule>".
  static Algorithm parse(std::string_view text, int oaa_iterations = 1);
  /// Comma-free label used in the emitted tables, e.g. "mp_oaa_4-8-16-32_N1".
  std::string label() const;
};

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(std::string_view text);

struct SweepConfig {
  SpinModelParams model;
  StateVector initial_state;
  std::vector<double> t_grid;
  std::vector<Algorithm> algorithms;
  int oaa_iterations = 1;
  /// Worker threads for distinct t values; 0 picks the hardware count.
  unsigned threads = 0;
  std::filesystem::path output_path;
  OutputFormat format = OutputFormat::kCsv;

  /// Default experiment: default model, sqrt(0.3)|00> + sqrt(0.7)|01>, 61
  /// points on [0, 60], exact / trotter:96 / mp:1,2,3,96 / mp:modified:2,4 /
  /// mp_oaa:modified:2,4 with N = 1.
  static SweepConfig default_experiment();

  /// Throws std::invalid_argument when the state is not 4-dim and normalized
  /// to 1e-9, the grid is empty or non-finite, or no algorithm is listed.
  void validate() const;
};

/// Reads a JSON config; absent keys keep default_experiment values.
/// Throws std::invalid_argument (bad content) or std::runtime_error (I/O).
SweepConfig load_config(const std::filesystem::path& path);
SweepConfig parse_config(std::string_view json_text);

struct SweepRow {
  double t = 0.0;
  std::string algo;
  /// Computational-basis populations of the renormalized output.
  std::vector<double> populations;
  double success_probability = 1.0;
  double state_error = 0.0;
  double classical_fidelity = 1.0;
  bool degenerate = false;
};

/// (sum_i sqrt(p_i q_i))^2. Throws std::invalid_argument for size mismatch,
/// negative entries, or a distribution not summing to 1 within 1e-9.
double classical_fidelity(std::span<const double> p, std::span<const double> q);

/// One row per algorithm at a single time.
std::vector<SweepRow> evolve(const SweepConfig& config, double t);

/// Rows ordered by t, then by the config's algorithm order. Distinct t values
/// are computed concurrently; output is independent of the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Least-squares slope of log(error) against log(t).
/// Requires >= 4 points, strictly ascending positive t, and positive errors.
double fit_order(std::span<const double> t_grid, std::span<const double> errors);

/// CSV header `t,algo,p00,p01,p10,p11,success_prob,state_error,fidelity`,
/// floats at 12 significant digits. JSON is an array of objects with the
/// same keys. Degenerate rows leave populations, state_error and fidelity
/// empty (CSV) or null (JSON).
void emit(std::span<const SweepRow> rows, OutputFormat format, std::ostream& out);
/// Throws std::runtime_error if the file cannot be written.
void emit(std::span<const SweepRow> rows, OutputFormat format,
          const std::filesystem::path& path);

}  // namespace mpt
