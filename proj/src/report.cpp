#include "jackprod/report.hpp"

#include <cmath>

namespace jackprod {

VerificationReport make_report(std::string identity, double lhs, double rhs, double tol) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.abs_err = std::abs(lhs - rhs);
  const bool tiny = std::abs(lhs) < 1e-300;
  r.rel_err = tiny ? r.abs_err : r.abs_err / std::abs(lhs);
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tol;
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"identity", r.identity}};
  for (const auto& [key, value] : r.params.items()) j[key] = value;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  if (!r.method_a.empty()) j["method_a"] = r.method_a;
  if (!r.method_b.empty()) j["method_b"] = r.method_b;
  if (r.resolved_order) j["resolved_order"] = *r.resolved_order;
  return j;
}

}  // namespace jackprod
