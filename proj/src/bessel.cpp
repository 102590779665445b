#include "jackprod/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "jackprod/errors.hpp"
#include "jackprod/jack.hpp"
#include "jackprod/kernels.hpp"
#include "jackprod/partition.hpp"
#include "jackprod/quadrature.hpp"
#include "jackprod/random.hpp"

namespace jackprod {

Multiplicity::Multiplicity(Rational kappa1, Rational kappa2)
    : kappa1_(std::move(kappa1)), kappa2_(std::move(kappa2)) {
  kappa1_.canonicalize();
  kappa2_.canonicalize();
  if (kappa1_ <= 0 || kappa2_ <= 0) throw DomainError("multiplicities must be positive");
}

Multiplicity Multiplicity::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("multiplicity must be 'kappa1,kappa2', got '" + std::string(text) + "'");
  }
  try {
    return Multiplicity(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

double bessel_i_norm(double nu, double t) {
  if (!(nu > -1.0)) throw DomainError("bessel_i_norm: order must exceed -1");
  const double q = 0.25 * t * t;
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int m = 1; m < 100000; ++m) {
    term *= q / (m * (nu + m));
    sum.add(term);
    // terms decrease once m (nu + m) > q
    if (term < 1e-17 * sum.value() && m * (nu + m) > q) break;
  }
  return sum.value();
}

namespace {

void require_nonnegative(Pair p, const char* what) {
  if (!(p[0] >= 0) || !(p[1] >= 0)) throw DomainError(std::string(what) + " must be componentwise nonnegative");
}

// [mu]_lambda for two rows, with an explicit check for vanishing factors.
double pochhammer_two_rows(double mu, const Partition& lambda, double k) {
  double r = 1.0;
  for (int j = 1; j <= lambda.length(); ++j) {
    const double base = mu - k * (j - 1);
    for (int i = 0; i < lambda[static_cast<std::size_t>(j - 1)]; ++i) {
      const double f = base + i;
      if (std::abs(f) <= 1e-14 * std::max(1.0, std::abs(base))) {
        throw PoleError("hyp0f1_two: factor (" + std::to_string(base) + ")_" + std::to_string(i + 1) +
                        " vanishes for lambda=" + lambda.to_string());
      }
      r *= f;
    }
  }
  return r;
}

Pair half_squares(Pair x) { return {0.5 * x[0] * x[0], 0.5 * x[1] * x[1]}; }

}  // namespace

SeriesValue hyp0f1_two(double mu, double k, Pair x, Pair y, int max_degree) {
  if (max_degree < 0) throw DomainError("hyp0f1_two: max_degree must be >= 0");
  if (!(k > 0)) throw DomainError("hyp0f1_two: k must be positive");
  CompensatedSum total;
  double last = 0.0;
  for (int d = 0; d <= max_degree; ++d) {
    CompensatedSum degree_sum;
    for (const auto& lambda : partitions_of_weight(d, 2)) {
      const double px = jack_p_two_var<double>(lambda, k, x[0], x[1]);
      const double py = jack_p_two_var<double>(lambda, k, y[0], y[1]);
      // a vanishing numerator kills the term even where [mu]_lambda has a
      // pole, e.g. every l(lambda) = 2 term at y = (1, 0)
      if (px * py == 0.0) continue;
      const double coeff = pochhammer_two_rows(mu, lambda, k) * hook_product_h(lambda, k);
      degree_sum.add(px * py / (jack_p_at_ones_two_var<double>(lambda, k) * coeff));
    }
    last = degree_sum.value();
    total.add(last);
  }
  return {total.value(), std::abs(last)};
}

SeriesValue bessel_b2_series(const Multiplicity& kappa, Pair x, Pair y, int max_degree) {
  return hyp0f1_two(kappa.order_mu(), kappa.k2(), half_squares(x), half_squares(y), max_degree);
}

double hyp0f1_lemma4(double mu, double k, Pair x, int npoints) {
  require_nonnegative(x, "hyp0f1_lemma4: x");
  const QuadratureRule rule = gauss_jacobi_rule(npoints, k);
  const double integral = integrate(rule, [&](double v) {
    const double arg = 2.0 * (x[0] + x[1] + v * (x[0] - x[1]));
    return bessel_i_norm(mu - 1.0, std::sqrt(std::max(arg, 0.0)));
  });
  return normalization_c(k) * integral;
}

double theorem3_order_value(const Multiplicity& kappa, Theorem3Order order) {
  return order == Theorem3Order::kMu ? kappa.order_mu() : kappa.order_mu() - 1.0;
}

std::string_view to_string(Theorem3Order order) {
  return order == Theorem3Order::kMu ? "mu" : "mu-1";
}

double bessel_b2_theorem3(const Multiplicity& kappa, Pair x, Pair y, int npoints_u, int npoints_v,
                          double order, bool parallel) {
  require_nonnegative(x, "bessel_b2_theorem3: x");
  require_nonnegative(y, "bessel_b2_theorem3: y");
  const QuadratureRule rule_u = gauss_jacobi_rule(npoints_u, kappa.k2());
  const QuadratureRule rule_v = gauss_jacobi_rule(npoints_v, kappa.k1());
  const double xs = x[0] * x[0] + x[1] * x[1];
  const double xd = x[0] * x[0] - x[1] * x[1];
  const double ys = y[0] * y[0] + y[1] * y[1];
  const double yd = y[0] * y[0] - y[1] * y[1];
  const double cross = 4.0 * x[0] * x[1] * y[0] * y[1];
  const double scale = xs * ys;
  const auto u = rule_u.nodes();
  const auto v = rule_v.nodes();

  auto term = [&](std::size_t i, std::size_t j) {
    double z = xs * ys + u[i] * xd * yd + v[j] * cross;
    if (z < 0) {
      if (z < -1e-12 * scale) throw NumericError("bessel_b2_theorem3: Z < 0 at a quadrature node");
      z = 0.0;
    }
    return bessel_i_norm(order, std::sqrt(0.5 * z));
  };
  const double integral = parallel
                              ? kernels::parallel::tensor_quadrature(rule_u.weights(), rule_v.weights(), term)
                              : kernels::serial::tensor_quadrature(rule_u.weights(), rule_v.weights(), term);
  return normalization_c(kappa.k1()) * normalization_c(kappa.k2()) * integral;
}

double bessel_b2_theorem3(const Multiplicity& kappa, Pair x, Pair y, int npoints_u, int npoints_v,
                          Theorem3Order order, bool parallel) {
  return bessel_b2_theorem3(kappa, x, y, npoints_u, npoints_v, theorem3_order_value(kappa, order), parallel);
}

OrderResolution resolve_theorem3_order(const Multiplicity& kappa) {
  constexpr int kPoints = 5;
  constexpr int kNodes = 64;
  constexpr int kDegree = 30;
  SampleStream stream(42);
  double err_mu = 0.0;
  double err_mu1 = 0.0;
  for (int p = 0; p < kPoints; ++p) {
    const Pair x{stream.uniform_open_closed(0.0, 0.8), stream.uniform_open_closed(0.0, 0.8)};
    const Pair y{stream.uniform_open_closed(0.0, 0.8), stream.uniform_open_closed(0.0, 0.8)};
    const double series = bessel_b2_series(kappa, x, y, kDegree).value;
    const double a = bessel_b2_theorem3(kappa, x, y, kNodes, kNodes, Theorem3Order::kMu);
    const double b = bessel_b2_theorem3(kappa, x, y, kNodes, kNodes, Theorem3Order::kMuMinusOne);
    err_mu = std::max(err_mu, std::abs(a - series) / std::abs(series));
    err_mu1 = std::max(err_mu1, std::abs(b - series) / std::abs(series));
  }
  const Theorem3Order selected = err_mu1 <= err_mu ? Theorem3Order::kMuMinusOne : Theorem3Order::kMu;
  if (std::min(err_mu, err_mu1) > 1e-5) {
    throw ResolutionFailure("no Bessel order reproduces the series: errors " + std::to_string(err_mu) +
                            " (mu), " + std::to_string(err_mu1) + " (mu-1)");
  }
  return {selected, theorem3_order_value(kappa, selected), err_mu, err_mu1};
}

VerificationReport bessel_rotation_symmetry(const Multiplicity& kappa, Pair x, Pair y, int max_degree,
                                            double tol) {
  const double r = 1.0 / std::sqrt(2.0);
  const Pair rx{r * (x[0] + x[1]), r * (-x[0] + x[1])};
  const Pair ry{r * (y[0] + y[1]), r * (-y[0] + y[1])};
  const double lhs = bessel_b2_series(kappa, x, y, max_degree).value;
  const double rhs = bessel_b2_series(kappa.swapped(), rx, ry, max_degree).value;
  VerificationReport rep = make_report("rotation", lhs, rhs, tol);
  rep.params = {{"kappa", {kappa.k1(), kappa.k2()}},
                {"x", {x[0], x[1]}},
                {"y", {y[0], y[1]}},
                {"max_degree", max_degree}};
  rep.method_a = "series(kappa, x, y)";
  rep.method_b = "series(kappa', r x, r y)";
  return rep;
}

VerificationReport bessel_product_identity(double k, double x, double y, int npoints, double tol) {
  if (!(k > 0)) throw DomainError("bessel_product_identity: k must be positive");
  const double nu = k - 0.5;
  const double lhs = bessel_i_norm(nu, x) * bessel_i_norm(nu, y);
  const QuadratureRule rule = gauss_jacobi_rule(npoints, k);
  const double rhs = normalization_c(k) * integrate(rule, [&](double u) {
                       const double z = x * x + y * y + 2.0 * u * x * y;
                       return bessel_i_norm(nu, std::sqrt(std::max(z, 0.0)));
                     });
  VerificationReport rep = make_report("bessel-product", lhs, rhs, tol);
  rep.params = {{"k", k}, {"x", x}, {"y", y}, {"npoints", npoints}};
  rep.method_a = "series";
  rep.method_b = "gauss-jacobi";
  return rep;
}

double limit_transition(double k, double x, int ell) {
  if (ell < 1) throw DomainError("limit_transition: ell must be >= 1");
  if (!(std::abs(x) < ell)) throw DomainError("limit_transition: requires |x| < ell");
  const Partition scaled{2 * ell, ell};
  const double t = x / ell;
  return jack_p_two_var<double>(scaled, k, 1.0 + t, 1.0 - t) / jack_p_at_ones_two_var<double>(scaled, k);
}

}  // namespace jackprod
