#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jackprod/bessel.hpp"
#include "jackprod/rational.hpp"
#include "jackprod/report.hpp"

namespace jackprod::harness {

/// Knobs shared by the verification sweeps. Unset fields take the
/// per-identity default documented in default_config().
struct SweepConfig {
  std::vector<Rational> k_values;
  std::vector<Multiplicity> kappas;
  std::optional<int> lambda_max;
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<int> npoints;
  std::optional<int> ntheta;
  std::optional<int> max_degree;
  std::uint64_t seed = 42;
  bool parallel = true;
};

/// product, zonal, bessel-series-vs-theorem3, bessel-product, rotation,
/// lemma4, limit
const std::vector<std::string>& identity_names();

/// Runs one named sweep ("all" runs every sweep in identity_names() order).
/// Cases are computed independently and returned in deterministic order.
std::vector<VerificationReport> run_sweep(std::string_view name, const SweepConfig& config);

std::vector<VerificationReport> sweep_product(const SweepConfig& config);
std::vector<VerificationReport> sweep_zonal(const SweepConfig& config);
std::vector<VerificationReport> sweep_series_vs_theorem3(const SweepConfig& config);
std::vector<VerificationReport> sweep_bessel_product(const SweepConfig& config);
std::vector<VerificationReport> sweep_rotation(const SweepConfig& config);
std::vector<VerificationReport> sweep_lemma4(const SweepConfig& config);
std::vector<VerificationReport> sweep_limit(const SweepConfig& config);

}  // namespace jackprod::harness
