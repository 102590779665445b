#pragma once

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace jackprod {

using Pair = std::array<double, 2>;

/// Outcome of checking one identity lhs == rhs. Failures are report
/// content, never exceptions.
struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();  // lambda, k, x, y, npoints, ...
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string method_a;
  std::string method_b;
  std::optional<double> resolved_order;
};

/// Fills errors and the verdict: relative error against |lhs|, absolute
/// error when |lhs| < 1e-300.
VerificationReport make_report(std::string identity, double lhs, double rhs, double tol);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace jackprod
