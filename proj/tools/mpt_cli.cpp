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

// mpt: multi-product Trotterization experiments from the command line.
//
//   mpt coeffs  --schedule <list|modified:a,k|original:gamma,k> [--oaa N]
//   mpt evolve  --config <file> --algo <name> --t <val>
//   mpt sweep   --config <file> [--out <path>] [--format csv|json]
//   mpt scaling --config <file> --k <int> --tmin <t> --tmax <t> --points <n>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpt/convergence.hpp"
#include "mpt/experiments.hpp"
#include "mpt/lcu.hpp"
#include "mpt/multiproduct.hpp"

namespace {

std::string fmt12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

mpt::SweepConfig config_from(const std::string& path) {
  return path.empty() ? mpt::SweepConfig::default_experiment() : mpt::load_config(path);
}

void run_coeffs(const std::string& schedule_text, int oaa_iterations) {
  const mpt::MpSchedule schedule = mpt::parse_schedule(schedule_text);
  std::cout << "schedule: " << schedule.describe() << '\n';
  std::cout << "q,L,c\n";
  double sum = 0.0;
  for (std::size_t q = 0; q < schedule.k(); ++q) {
    std::cout << q + 1 << ',' << schedule.iterations()[q] << ','
              << fmt12(schedule.coefficients()[q]) << '\n';
    sum += schedule.coefficients()[q];
  }
  const double probability = schedule.lcu_probability();
  std::cout << "sum_c = " << fmt12(sum) << '\n'
            << "sum_abs_c = " << fmt12(schedule.abs_sum()) << '\n'
            << "lcu_probability = " << fmt12(probability) << '\n'
            << "oaa_probability_N" << oaa_iterations << " = "
            << fmt12(mpt::predicted_probability(probability, oaa_iterations)) << '\n';
}

void run_evolve(const std::string& config_path, const std::string& algo, double t) {
  mpt::SweepConfig config = config_from(config_path);
  config.algorithms = {mpt::Algorithm::parse(algo, config.oaa_iterations)};
  const std::vector<mpt::SweepRow> rows = mpt::evolve(config, t);
  mpt::emit(rows, mpt::OutputFormat::kCsv, std::cout);
}

void run_sweep(const std::string& config_path, const std::string& out,
               const std::string& format) {
  mpt::SweepConfig config = config_from(config_path);
  if (!out.empty()) config.output_path = out;
  if (!format.empty()) config.format = mpt::parse_format(format);
  const std::vector<mpt::SweepRow> rows = mpt::run_sweep(config);
  if (config.output_path.empty()) {
    mpt::emit(rows, config.format, std::cout);
  } else {
    mpt::emit(rows, config.format, config.output_path);
    std::cerr << "wrote " << rows.size() << " rows to " << config.output_path.string()
              << '\n';
  }
}

void run_scaling(const std::string& config_path, int k, std::int64_t a,
                 double tmin, double tmax, int points, const std::string& precision) {
  if (!(tmin > 0.0) || !(tmax > tmin) || points < 4) {
    throw std::invalid_argument("scaling: need 0 < tmin < tmax and points >= 4");
  }
  const mpt::SweepConfig config = config_from(config_path);
  const mpt::Precision mode =
      precision == "double" ? mpt::Precision::kDouble : mpt::Precision::kQuad;
  if (precision != "double" && precision != "quad") {
    throw std::invalid_argument("scaling: precision must be double or quad");
  }
  const mpt::MpSchedule schedule = mpt::MpSchedule::modified(a, k);

  std::vector<double> times;
  for (int i = 0; i < points; ++i) {
    times.push_back(tmin * std::pow(tmax / tmin, static_cast<double>(i) / (points - 1)));
  }
  const std::vector<double> errors = mpt::state_error_curve(
      mpt::build_spin_hamiltonian(config.model), config.initial_state, schedule,
      times, mode);

  // Points at the roundoff floor carry no order information.
  const double epsilon = mode == mpt::Precision::kDouble
                             ? std::numeric_limits<double>::epsilon()
                             : 1.93e-34;
  std::vector<double> kept_t;
  std::vector<double> kept_e;
  std::cout << "schedule: " << schedule.describe() << '\n' << "t,state_error\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::cout << fmt12(times[i]) << ',' << fmt12(errors[i]) << '\n';
    if (std::isfinite(errors[i]) && errors[i] > 100.0 * epsilon) {
      kept_t.push_back(times[i]);
      kept_e.push_back(errors[i]);
    }
  }
  const double slope = mpt::fit_order(kept_t, kept_e);
  std::cout << "slope = " << fmt12(slope) << " (theory " << 2 * k + 1 << ", "
            << kept_t.size() << " points)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-product Trotterization with LCU and oblivious amplitude amplification"};
  app.require_subcommand(1);

  std::string schedule_text;
  int oaa_iterations = 1;
  auto* coeffs = app.add_subcommand("coeffs", "Multi-product coefficients of a schedule");
  coeffs->add_option("--schedule", schedule_text,
                     "Iteration list (2,4,8), modified:a,k or original:gamma,k")
      ->required();
  coeffs->add_option("--oaa", oaa_iterations, "OAA iterations for the predicted probability")
      ->check(CLI::NonNegativeNumber);

  std::string config_path;
  std::string algo;
  double t = 0.0;
  auto* evolve = app.add_subcommand("evolve", "Evolve the configured state with one algorithm");
  evolve->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  evolve->add_option("--algo", algo, "exact, trotter:<l>, mp:<schedule>, mp_oaa:<schedule>")
      ->required();
  evolve->add_option("--t", t, "Evolution time")->required();

  std::string out;
  std::string format;
  auto* sweep = app.add_subcommand("sweep", "Run the configured sweep and write CSV/JSON");
  sweep->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "Output path (default: config output, else stdout)");
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  int k = 1;
  std::int64_t a = 1;
  double tmin = 0.05;
  double tmax = 0.4;
  int points = 8;
  std::string precision = "quad";
  auto* scaling = app.add_subcommand("scaling", "Fit the convergence order of modified(a, k)");
  scaling->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  scaling->add_option("--k", k, "Number of combined products")->required()->check(CLI::PositiveNumber);
  scaling->add_option("--a", a, "Schedule scale, L(q) = a 2^q")->check(CLI::PositiveNumber);
  scaling->add_option("--tmin", tmin, "Smallest time");
  scaling->add_option("--tmax", tmax, "Largest time");
  scaling->add_option("--points", points, "Number of log-spaced times");
  scaling->add_option("--precision", precision, "double or quad")
      ->check(CLI::IsMember({"double", "quad"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeffs) run_coeffs(schedule_text, oaa_iterations);
    if (*evolve) run_evolve(config_path, algo, t);
    if (*sweep) run_sweep(config_path, out, format);
    if (*scaling) run_scaling(config_path, k, a, tmin, tmax, points, precision);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
