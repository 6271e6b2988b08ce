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

#include "mpt/multiproduct.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mpt/product_formula.hpp"

namespace mpt {

namespace {

void require_increasing(std::span<const std::int64_t> iterations) {
  if (iterations.empty()) {
    throw std::invalid_argument("schedule: at least one iteration count required");
  }
  for (std::size_t q = 0; q < iterations.size(); ++q) {
    if (iterations[q] < 1) {
      std::ostringstream msg;
      msg << "schedule: iteration counts must be positive, got "
          << iterations[q];
      throw std::invalid_argument(msg.str());
    }
    if (q > 0 && iterations[q] <= iterations[q - 1]) {
      std::ostringstream msg;
      msg << "schedule: iteration counts must be strictly increasing, got "
          << iterations[q - 1] << " then " << iterations[q];
      throw std::invalid_argument(msg.str());
    }
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(const std::string& s, std::string_view context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("schedule: cannot parse integer '" + s +
                                "' in '" + std::string(context) + "'");
  }
  return value;
}

double parse_real(const std::string& s, std::string_view context) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("schedule: cannot parse number '" + s +
                                "' in '" + std::string(context) + "'");
  }
  return value;
}

Operator propagate(const Operator& h, const Complex& t) {
  return hermitian_propagator(h, t.real());
}

}  // namespace

std::vector<double> mp_coefficients(std::span<const std::int64_t> iterations) {
  require_increasing(iterations);
  return detail::mp_coefficients<double>(iterations);
}

MpSchedule::MpSchedule(ScheduleKind kind, std::vector<std::int64_t> iterations,
                       std::int64_t a, double gamma)
    : kind_(kind), iterations_(std::move(iterations)), a_(a), gamma_(gamma) {
  coefficients_ = mp_coefficients(iterations_);
  // Neumaier summation; the coefficients themselves carry the roundoff.
  double sum = 0.0;
  double carry = 0.0;
  for (double c : coefficients_) {
    const double next = sum + c;
    carry += std::abs(sum) >= std::abs(c) ? (sum - next) + c : (c - next) + sum;
    sum = next;
  }
  sum += carry;
  if (!(std::abs(sum - 1.0) <= kCoefficientSumTol)) {
    std::ostringstream msg;
    msg << "schedule: coefficients sum to " << sum
        << ", ill-conditioned iteration counts";
    throw std::domain_error(msg.str());
  }
}

MpSchedule MpSchedule::modified(std::int64_t a, int k) {
  if (a < 1) throw std::invalid_argument("modified schedule: a must be >= 1");
  if (k < 1) throw std::invalid_argument("modified schedule: k must be >= 1");
  if (k > 60 || a > (std::numeric_limits<std::int64_t>::max() >> k)) {
    throw std::invalid_argument("modified schedule: a * 2^k overflows");
  }
  std::vector<std::int64_t> iterations;
  for (int q = 1; q <= k; ++q) iterations.push_back(a << q);
  return MpSchedule(ScheduleKind::kModified, std::move(iterations), a, 0.0);
}

MpSchedule MpSchedule::original(double gamma, int k) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("original schedule: gamma must be > 0");
  }
  if (k < 2) throw std::invalid_argument("original schedule: k must be >= 2");
  const double last = std::round(std::exp(gamma * k));
  if (!(last < 9.0e18)) {
    throw std::invalid_argument("original schedule: e^{gamma k} overflows");
  }
  const auto last_count = static_cast<std::int64_t>(last);
  if (last_count <= k - 1) {
    std::ostringstream msg;
    msg << "original schedule: round(e^{gamma k}) = " << last_count
        << " does not exceed k - 1 = " << k - 1;
    throw std::invalid_argument(msg.str());
  }
  std::vector<std::int64_t> iterations;
  for (int q = 1; q < k; ++q) iterations.push_back(q);
  iterations.push_back(last_count);
  return MpSchedule(ScheduleKind::kOriginal, std::move(iterations), 0, gamma);
}

MpSchedule MpSchedule::explicit_list(std::vector<std::int64_t> iterations) {
  return MpSchedule(ScheduleKind::kExplicit, std::move(iterations), 0, 0.0);
}

double MpSchedule::abs_sum() const {
  double sum = 0.0;
  for (double c : coefficients_) sum += std::abs(c);
  return sum;
}

double MpSchedule::lcu_probability() const {
  const double s = abs_sum();
  return 1.0 / (s * s);
}

std::string MpSchedule::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case ScheduleKind::kModified:
      out << "modified:" << a_ << "," << k() << " -> ";
      break;
    case ScheduleKind::kOriginal:
      out << "original:" << gamma_ << "," << k() << " -> ";
      break;
    case ScheduleKind::kExplicit:
      break;
  }
  out << "{";
  for (std::size_t q = 0; q < iterations_.size(); ++q) {
    out << (q ? "," : "") << iterations_[q];
  }
  out << "}";
  return out.str();
}

MpSchedule depth_matched_schedule(double gamma, int k) {
  if (!(gamma > 0.0) || k < 1) {
    throw std::invalid_argument("depth_matched_schedule: need gamma > 0, k >= 1");
  }
  std::vector<std::int64_t> iterations;
  for (int q = 1; q <= k; ++q) {
    iterations.push_back(static_cast<std::int64_t>(
        std::round(std::exp(gamma * k) * std::ldexp(1.0, q - k) / 3.0)));
  }
  return MpSchedule::explicit_list(std::move(iterations));
}

MpSchedule parse_schedule(std::string_view text) {
  const std::string spec = trim(text);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    std::vector<std::int64_t> iterations;
    for (const auto& part : split(spec, ',')) {
      iterations.push_back(parse_int(part, spec));
    }
    return MpSchedule::explicit_list(std::move(iterations));
  }
  const std::string kind = trim(std::string_view(spec).substr(0, colon));
  const auto args = split(std::string_view(spec).substr(colon + 1), ',');
  if (args.size() != 2) {
    throw std::invalid_argument("schedule: '" + spec +
                                "' needs exactly two parameters");
  }
  if (kind == "modified") {
    return MpSchedule::modified(parse_int(args[0], spec),
                                static_cast<int>(parse_int(args[1], spec)));
  }
  if (kind == "original") {
    return MpSchedule::original(parse_real(args[0], spec),
                                static_cast<int>(parse_int(args[1], spec)));
  }
  throw std::invalid_argument("schedule: unknown kind '" + kind +
                              "' (expected modified or original)");
}

Operator mp_operator(const HamiltonianDecomposition& decomp, double t,
                     const MpSchedule& schedule) {
  if (decomp.empty()) {
    throw std::invalid_argument("mp_operator: empty Hamiltonian decomposition");
  }
  return detail::mp_operator(decomp.terms(), Complex(t),
                             std::span<const std::int64_t>(schedule.iterations()),
                             std::span<const double>(schedule.coefficients()),
                             propagate);
}

namespace {

StateVector checked_exact_state(const HamiltonianDecomposition& decomp,
                                double t, const Operator& m,
                                const StateVector& psi0) {
  if (m.rows() != decomp.dim() || m.cols() != decomp.dim() ||
      psi0.size() != decomp.dim()) {
    throw std::invalid_argument("error_report: dimension mismatch");
  }
  if (!(std::abs(psi0.squaredNorm() - 1.0) <= kAlgebraicTol)) {
    throw std::invalid_argument("error_report: initial state is not normalized");
  }
  return hermitian_propagator(total(decomp), t) * psi0;
}

}  // namespace

ErrorReport error_report(const HamiltonianDecomposition& decomp, double t,
                         const Operator& m, const StateVector& psi0) {
  const StateVector exact_state = checked_exact_state(decomp, t, m, psi0);
  const Operator exact = hermitian_propagator(total(decomp), t);

  ErrorReport report;
  report.t = t;
  report.operator_error = spectral_norm(m - exact);
  report.nonunitarity = unitarity_defect(m);

  const StateVector out = m * psi0;
  const double norm = out.norm();
  if (norm <= kDegenerateNorm) {
    report.degenerate = true;
    report.state_error = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  report.state_error = (exact_state - out / norm).norm();
  return report;
}

double phase_aligned_state_error(const HamiltonianDecomposition& decomp,
                                 double t, const Operator& m,
                                 const StateVector& psi0) {
  const StateVector exact_state = checked_exact_state(decomp, t, m, psi0);
  StateVector out = m * psi0;
  const double norm = out.norm();
  if (norm <= kDegenerateNorm) return std::numeric_limits<double>::quiet_NaN();
  out /= norm;
  const Complex overlap = out.dot(exact_state);
  if (std::abs(overlap) > 0.0) out *= overlap / std::abs(overlap);
  return (exact_state - out).norm();
}

}  // namespace mpt
