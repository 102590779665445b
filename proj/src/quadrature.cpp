#include "jackprod/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numbers>

#include "jackprod/errors.hpp"

namespace jackprod {

QuadratureRule::QuadratureRule(double k, std::vector<double> nodes, std::vector<double> weights)
    : k_(k), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) throw DomainError("QuadratureRule: size mismatch");
}

double beta_half(double k) {
  if (!(k > 0)) throw DomainError("beta_half: k must be positive");
  if (k < 100) return std::sqrt(std::numbers::pi) * std::tgamma(k) / std::tgamma(k + 0.5);
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(k) - std::lgamma(k + 0.5));
}

double even_moment(int j, double k) {
  if (j < 0) throw DomainError("even_moment: negative index");
  double m = beta_half(k);
  for (int i = 0; i < j; ++i) m *= (i + 0.5) / (i + k + 0.5);
  return m;
}

double normalization_c(double k) { return 1.0 / beta_half(k); }

namespace {

// Monic recurrence p_{j+1} = u p_j - beta_j p_{j-1} for the weight
// (1-u^2)^(k-1). The generic formula is 0/0 at j=1, k=1/2.
double recurrence_beta(int j, double k) {
  if (j == 1) return 1.0 / (2.0 * k + 1.0);
  const double jj = j;
  return jj * (jj + 2.0 * k - 2.0) / ((2.0 * jj + 2.0 * k - 1.0) * (2.0 * jj + 2.0 * k - 3.0));
}

struct OrthonormalValues {
  double pn;       // phat_n(u)
  double dpn;      // phat_n'(u)
  double sum_sq;   // sum_{j<n} phat_j(u)^2
};

OrthonormalValues orthonormal_at(double u, int n, double mass, std::span<const double> sqrt_beta) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(mass);
  double d_prev = 0.0;
  double d = 0.0;
  CompensatedSum sum_sq;
  for (int j = 0; j < n; ++j) {
    sum_sq.add(p * p);
    const double b_next = sqrt_beta[static_cast<std::size_t>(j + 1)];
    const double b_cur = sqrt_beta[static_cast<std::size_t>(j)];
    const double p_next = (u * p - b_cur * p_prev) / b_next;
    const double d_next = (p + u * d - b_cur * d_prev) / b_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d, sum_sq.value()};
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int npoints, double k) {
  if (npoints < 1) throw DomainError("gauss_jacobi_rule: npoints must be >= 1");
  if (!(k > 0)) throw DomainError("gauss_jacobi_rule: k must be positive");
  const double mass = beta_half(k);
  const auto n = static_cast<std::size_t>(npoints);

  // sqrt_beta[0] is unused by the recurrence (multiplies p_{-1} = 0)
  std::vector<double> sqrt_beta(n + 1, 0.0);
  for (std::size_t j = 1; j <= n; ++j) sqrt_beta[j] = std::sqrt(recurrence_beta(static_cast<int>(j), k));

  std::vector<double> nodes(n, 0.0);
  if (n > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
    for (std::size_t j = 0; j + 1 < n; ++j) sub[static_cast<Eigen::Index>(j)] = sqrt_beta[j + 1];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("gauss_jacobi_rule: eigensolver failed");
    for (std::size_t i = 0; i < n; ++i) nodes[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  }

  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = orthonormal_at(nodes[i], npoints, mass, sqrt_beta);
    if (v.dpn != 0.0) {
      nodes[i] -= v.pn / v.dpn;
      v = orthonormal_at(nodes[i], npoints, mass, sqrt_beta);
    }
    weights[i] = 1.0 / v.sum_sq;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  std::vector<double> sorted_nodes(n), sorted_weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted_nodes[i] = nodes[order[i]];
    sorted_weights[i] = weights[order[i]];
  }

  // mirror-pair averaging enforces exact symmetry
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t m = n - 1 - i;
    const double node = 0.5 * (sorted_nodes[m] - sorted_nodes[i]);
    const double weight = 0.5 * (sorted_weights[m] + sorted_weights[i]);
    sorted_nodes[i] = -node;
    sorted_nodes[m] = node;
    sorted_weights[i] = sorted_weights[m] = weight;
  }
  if (n % 2 == 1) sorted_nodes[n / 2] = 0.0;

  return QuadratureRule(k, std::move(sorted_nodes), std::move(sorted_weights));
}

}  // namespace jackprod
