#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "mellin/profile.hpp"

namespace mellin::cli {

struct PointRow {
  double tau = 0.0;
  std::optional<double> truth;
  double estimate = 0.0;
  std::optional<double> error;
};

/// One evaluation of a reconstruction or differentiation method on the tau
/// grid. Errors are present only when a truth profile is available.
struct Evaluation {
  std::vector<PointRow> rows;
  std::optional<double> max_error;
  std::optional<double> rms_error;
};

struct ConvergenceSeries {
  double gamma = 0.0;
  std::vector<long> truncations;
  std::vector<double> max_errors;
  std::optional<double> slope;
};

MellinProfile build_function(const FunctionSpec& spec);
/// The partner g (or kernel h) with index conjugate to f's.
MellinProfile build_partner(const FunctionSpec& spec, const MellinProfile& f);

/// Runs the configured command's evaluation at truncation `n` (N for the
/// regular methods, K for higgins/seip) and compression `gamma`.
Evaluation evaluate(const RunConfig& config, BenchTarget target, long n, double gamma);

/// Least-squares slope of ln(error) against ln(n); points with zero error
/// are skipped. Empty when fewer than two points remain.
std::optional<double> fit_loglog_slope(std::span<const long> n, std::span<const double> error);

/// Dispatches the command. Returns the process exit code: 0 on success, 1
/// for invalid configuration or unreadable input, 2 for numerical failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mellin::cli
