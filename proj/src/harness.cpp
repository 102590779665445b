#include "jackprod/harness.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "jackprod/dunkl.hpp"
#include "jackprod/errors.hpp"
#include "jackprod/kernels.hpp"
#include "jackprod/partition.hpp"
#include "jackprod/product.hpp"
#include "jackprod/random.hpp"

namespace jackprod::harness {

namespace {

std::vector<double> k_list(const SweepConfig& c, std::initializer_list<double> fallback) {
  if (c.k_values.empty()) return fallback;
  std::vector<double> out;
  for (const auto& k : c.k_values) out.push_back(to_double(k));
  return out;
}

std::vector<Multiplicity> kappa_list(const SweepConfig& c) {
  if (!c.kappas.empty()) return c.kappas;
  return {Multiplicity(1, 1), Multiplicity(Rational(4, 5), Rational(13, 10)),
          Multiplicity(Rational(1, 2), Rational(1, 2))};
}

std::vector<Partition> two_row_partitions(int max_weight) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d) {
    for (auto& p : partitions_of_weight(d, 2)) out.push_back(std::move(p));
  }
  return out;
}

template <class F>
std::vector<VerificationReport> evaluate(std::size_t n, bool parallel, F&& f) {
  return parallel ? kernels::parallel::map_indices<VerificationReport>(n, f)
                  : kernels::serial::map_indices<VerificationReport>(n, f);
}

nlohmann::json parts_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

struct PointPair {
  Pair x;
  Pair y;
};

// Five seeded points with all coordinates in (0, bound].
std::vector<PointPair> seeded_points(std::uint64_t seed, int count, double bound) {
  SampleStream stream(seed);
  std::vector<PointPair> pts;
  for (int i = 0; i < count; ++i) {
    PointPair p;
    p.x = {stream.uniform_open_closed(0.0, bound), stream.uniform_open_closed(0.0, bound)};
    p.y = {stream.uniform_open_closed(0.0, bound), stream.uniform_open_closed(0.0, bound)};
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"product",  "zonal",  "bessel-series-vs-theorem3",
                                              "bessel-product", "rotation", "lemma4", "limit"};
  return names;
}

std::vector<VerificationReport> sweep_product(const SweepConfig& c) {
  const auto ks = k_list(c, {0.5, 1.0, 1.5, 2.75});
  const auto lambdas = two_row_partitions(c.lambda_max.value_or(8));
  const int samples = c.samples.value_or(50);
  const double tol = c.tol.value_or(1e-10);
  struct Case {
    double k;
    Partition lambda;
    PointPair pt;
  };
  std::vector<Case> cases;
  SampleStream stream(c.seed);
  for (double k : ks) {
    for (const auto& lambda : lambdas) {
      for (int s = 0; s < samples; ++s) {
        PointPair p;
        p.x = {stream.uniform_open_closed(0.0, 3.0), stream.uniform_open_closed(0.0, 3.0)};
        p.y = {stream.uniform_open_closed(0.0, 3.0), stream.uniform_open_closed(0.0, 3.0)};
        cases.push_back({k, lambda, p});
      }
    }
  }
  return evaluate(cases.size(), c.parallel, [&](std::size_t i) {
    const Case& cs = cases[i];
    const int npoints = c.npoints.value_or(cs.lambda.weight() + 4);
    return verify_product(cs.lambda, cs.k, cs.pt.x, cs.pt.y, npoints, tol);
  });
}

std::vector<VerificationReport> sweep_zonal(const SweepConfig& c) {
  const auto lambdas = two_row_partitions(c.lambda_max.value_or(6));
  const int samples = c.samples.value_or(5);
  const int ntheta = c.ntheta.value_or(256);
  const double tol = c.tol.value_or(1e-10);
  std::vector<std::pair<Partition, PointPair>> cases;
  SampleStream stream(c.seed);
  for (const auto& lambda : lambdas) {
    for (int s = 0; s < samples; ++s) {
      PointPair p;
      p.x = {stream.uniform_open_closed(0.0, 3.0), stream.uniform_open_closed(0.0, 3.0)};
      p.y = {stream.uniform_open_closed(0.0, 3.0), stream.uniform_open_closed(0.0, 3.0)};
      cases.emplace_back(lambda, p);
    }
  }
  return evaluate(cases.size(), c.parallel, [&](std::size_t i) {
    const auto& [lambda, p] = cases[i];
    VerificationReport r =
        make_report("zonal", product_lhs(lambda, 0.5, p.x, p.y), zonal_so2_average(lambda, p.x, p.y, ntheta), tol);
    r.params = {{"lambda", parts_json(lambda)}, {"k", 0.5}, {"x", {p.x[0], p.x[1]}},
                {"y", {p.y[0], p.y[1]}},        {"ntheta", ntheta}};
    r.method_a = "product-lhs";
    r.method_b = "so2-trapezoid";
    return r;
  });
}

std::vector<VerificationReport> sweep_series_vs_theorem3(const SweepConfig& c) {
  const double tol = c.tol.value_or(1e-7);
  const int nodes = c.npoints.value_or(64);
  const int degree = c.max_degree.value_or(30);
  const auto pts = seeded_points(c.seed, c.samples.value_or(5), 0.8);
  std::vector<VerificationReport> out;
  for (const auto& kappa : kappa_list(c)) {
    const OrderResolution res = resolve_theorem3_order(kappa);
    auto batch = evaluate(pts.size(), c.parallel, [&](std::size_t i) {
      const auto& p = pts[i];
      const double series = bessel_b2_series(kappa, p.x, p.y, degree).value;
      const double integral = bessel_b2_theorem3(kappa, p.x, p.y, nodes, nodes, res.order, false);
      VerificationReport r = make_report("bessel-series-vs-theorem3", series, integral, tol);
      r.params = {{"kappa", {kappa.k1(), kappa.k2()}}, {"x", {p.x[0], p.x[1]}}, {"y", {p.y[0], p.y[1]}},
                  {"npoints", nodes}, {"max_degree", degree}, {"order_candidate", to_string(res.selected)}};
      r.method_a = "series";
      r.method_b = "double-integral";
      r.resolved_order = res.order;
      return r;
    });
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<VerificationReport> sweep_bessel_product(const SweepConfig& c) {
  const auto ks = k_list(c, {0.5, 1.0, 1.5});
  const double tol = c.tol.value_or(1e-10);
  const int npoints = c.npoints.value_or(64);
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 5.0};
  std::vector<std::array<double, 3>> cases;
  for (double k : ks) {
    for (double x : grid) {
      for (double y : grid) cases.push_back({k, x, y});
    }
  }
  return evaluate(cases.size(), c.parallel, [&](std::size_t i) {
    return bessel_product_identity(cases[i][0], cases[i][1], cases[i][2], npoints, tol);
  });
}

std::vector<VerificationReport> sweep_rotation(const SweepConfig& c) {
  const double tol = c.tol.value_or(1e-8);
  const int degree = c.max_degree.value_or(30);
  const auto pts = seeded_points(c.seed, c.samples.value_or(5), 0.8);
  std::vector<VerificationReport> out;
  for (const auto& kappa : kappa_list(c)) {
    for (const auto& p : pts) out.push_back(bessel_rotation_symmetry(kappa, p.x, p.y, degree, tol));
    for (int d = 0; d <= 6; ++d) {
      for (int i = 0; i <= d; ++i) {
        const IntertwiningResult res = check_rotation_intertwining(Poly2::monomial(i, d - i), kappa);
        VerificationReport r = make_report("intertwining", 0.0, 0.0, 0.0);
        r.pass = res.holds;
        r.params = {{"kappa", {kappa.k1(), kappa.k2()}}, {"monomial", {i, d - i}}};
        if (!res.holds) r.params["counterexample"] = res.counterexample;
        r.method_a = "T^kappa(f o r)";
        r.method_b = "(T^kappa' f) o r";
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> sweep_lemma4(const SweepConfig& c) {
  const double tol = c.tol.value_or(1e-9);
  const int npoints = c.npoints.value_or(64);
  const int degree = c.max_degree.value_or(40);
  const auto ks = k_list(c, {0.5, 1.0, 2.0});
  const std::vector<double> mus{1.0, 1.5, 2.4};
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::array<double, 4>> cases;
  for (double mu : mus) {
    for (double k : ks) {
      for (double a : grid) {
        for (double b : grid) cases.push_back({mu, k, a, b});
      }
    }
  }
  return evaluate(cases.size(), c.parallel, [&](std::size_t i) {
    const auto [mu, k, a, b] = cases[i];
    const Pair x{a, b};
    const double series = hyp0f1_two(mu, k, x, {1.0, 0.0}, degree).value;
    const double integral = hyp0f1_lemma4(mu, k, x, npoints);
    VerificationReport r = make_report("lemma4", series, integral, tol);
    r.params = {{"mu", mu}, {"k", k}, {"x", {a, b}}, {"npoints", npoints}, {"max_degree", degree}};
    r.method_a = "series";
    r.method_b = "single-integral";
    return r;
  });
}

std::vector<VerificationReport> sweep_limit(const SweepConfig& c) {
  const auto ks = k_list(c, {0.5, 1.0});
  const std::vector<double> xs{0.5, 1.0};
  const std::vector<int> ells{8, 16, 32, 64};
  std::vector<VerificationReport> out;
  for (double k : ks) {
    for (double x : xs) {
      const double target = bessel_i_norm(k - 0.5, x);
      std::vector<double> errors;
      for (int ell : ells) errors.push_back(std::abs(limit_transition(k, x, ell) - target));
      for (std::size_t i = 1; i < ells.size(); ++i) {
        const double ratio = errors[i] / errors[i - 1];
        VerificationReport r;
        r.identity = "limit";
        r.lhs = ratio;
        r.rhs = 0.5;
        r.abs_err = std::abs(ratio - 0.5);
        r.rel_err = r.abs_err / 0.5;
        r.tol = c.tol.value_or(0.15);
        r.pass = errors[i] < errors[i - 1] && r.abs_err <= r.tol;
        r.params = {{"k", k},
                    {"x", x},
                    {"ell", ells[i]},
                    {"error", errors[i]},
                    {"previous_error", errors[i - 1]}};
        r.method_a = "error ratio per doubling";
        r.method_b = "first-order rate";
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> run_sweep(std::string_view name, const SweepConfig& config) {
  using Sweep = std::function<std::vector<VerificationReport>(const SweepConfig&)>;
  static const std::map<std::string, Sweep, std::less<>> sweeps{
      {"product", sweep_product},
      {"zonal", sweep_zonal},
      {"bessel-series-vs-theorem3", sweep_series_vs_theorem3},
      {"bessel-product", sweep_bessel_product},
      {"rotation", sweep_rotation},
      {"lemma4", sweep_lemma4},
      {"limit", sweep_limit},
  };
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : identity_names()) {
      auto part = sweeps.at(n)(config);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = sweeps.find(name);
  if (it == sweeps.end()) throw ParseError("unknown verification '" + std::string(name) + "'");
  return it->second(config);
}

}  // namespace jackprod::harness
