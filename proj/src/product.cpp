#include "jackprod/product.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jackprod/jack.hpp"

namespace jackprod {

namespace {

void require_nonnegative(Pair p, const char* what) {
  if (!(p[0] >= 0) || !(p[1] >= 0)) throw DomainError(std::string(what) + " must be componentwise nonnegative");
}

// X1 from trace and discriminant, X2 = det / X1 to avoid cancellation.
std::pair<double, double> stable_roots(double trace, double disc, double det) {
  const double big = 0.5 * (trace + std::sqrt(disc));
  const double small = big > 0 ? det / big : 0.0;
  return {big, small};
}

nlohmann::json pair_json(Pair p) { return nlohmann::json::array({p[0], p[1]}); }

}  // namespace

SplitPair eigen_split(Pair x, Pair y, double u) {
  require_nonnegative(x, "eigen_split: x");
  require_nonnegative(y, "eigen_split: y");
  if (!(std::abs(u) <= 1.0)) throw DomainError("eigen_split: |u| must be <= 1");
  SplitPair s{};
  s.alpha_split = 0.5 * ((x[0] + x[1]) * (y[0] + y[1]) + (x[0] - x[1]) * (y[0] - y[1]) * u);
  s.a = 0.5 * (y[0] + y[1] + (y[0] - y[1]) * u);
  s.a_bar = 0.5 * (y[0] + y[1] - (y[0] - y[1]) * u);
  const double det = x[0] * x[1] * y[0] * y[1];
  double disc = s.alpha_split * s.alpha_split - 4.0 * det;
  if (disc < 0) {
    if (disc < -1e-12 * s.alpha_split * s.alpha_split) {
      throw NumericError("eigen_split: negative discriminant " + std::to_string(disc));
    }
    disc = 0.0;
  }
  s.discriminant = disc;
  std::tie(s.x1_big, s.x2_small) = stable_roots(s.alpha_split, disc, det);
  return s;
}

std::pair<double, double> rotation_conjugate_eigs(Pair x, Pair y, double theta) {
  require_nonnegative(x, "rotation_conjugate_eigs: x");
  require_nonnegative(y, "rotation_conjugate_eigs: y");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double m11 = x[0] * y[0] * c * c + x[0] * y[1] * s * s;
  const double m22 = x[1] * y[1] * c * c + x[1] * y[0] * s * s;
  const double m12 = std::sqrt(x[0] * x[1]) * (y[0] - y[1]) * c * s;
  const double trace = m11 + m22;
  const double det = m11 * m22 - m12 * m12;
  // (m11-m22)^2 + 4 m12^2 has no cancellation, unlike trace^2 - 4 det
  const double disc = (m11 - m22) * (m11 - m22) + 4.0 * m12 * m12;
  return stable_roots(trace, disc, det);
}

double product_lhs(const Partition& lambda, double k, Pair x, Pair y) {
  return jack_p_two_var<double>(lambda, k, x[0], x[1]) * jack_p_two_var<double>(lambda, k, y[0], y[1]) /
         jack_p_at_ones_two_var<double>(lambda, k);
}

double product_rhs(const Partition& lambda, const QuadratureRule& rule, Pair x, Pair y) {
  const double k = rule.k();
  const double integral = integrate(rule, [&](double u) {
    const SplitPair s = eigen_split(x, y, u);
    return jack_p_two_var<double>(lambda, k, s.x1_big, s.x2_small);
  });
  return normalization_c(k) * integral;
}

double product_rhs(const Partition& lambda, double k, Pair x, Pair y, int npoints) {
  if (lambda.length() > 2) throw DomainError("product_rhs: at most two parts");
  const int needed = (lambda[0] - lambda[1] + 2) / 2;
  if (npoints < needed) {
    throw DomainError("product_rhs: npoints=" + std::to_string(npoints) + " below exactness bound " +
                      std::to_string(needed));
  }
  return product_rhs(lambda, gauss_jacobi_rule(npoints, k), x, y);
}

VerificationReport verify_product(const Partition& lambda, double k, Pair x, Pair y, int npoints, double tol) {
  VerificationReport r = make_report("product", product_lhs(lambda, k, x, y),
                                     product_rhs(lambda, k, x, y, npoints), tol);
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  r.params = {{"lambda", parts}, {"k", k}, {"x", pair_json(x)}, {"y", pair_json(y)}, {"npoints", npoints}};
  r.method_a = "closed-form";
  r.method_b = "gauss-jacobi";
  return r;
}

double zonal_so2_average(const Partition& lambda, Pair x, Pair y, int ntheta) {
  if (ntheta < 1) throw DomainError("zonal_so2_average: ntheta must be >= 1");
  CompensatedSum acc;
  for (int i = 0; i < ntheta; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / ntheta;
    const auto [big, small] = rotation_conjugate_eigs(x, y, theta);
    acc.add(jack_p_two_var<double>(lambda, 0.5, big, small));
  }
  return acc.value() / ntheta;
}

}  // namespace jackprod
