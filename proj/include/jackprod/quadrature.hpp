#pragma once

#include <cmath>
#include <exception>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackprod {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Gauss rule for the weight (1-u^2)^(k-1) on [-1, 1].
class QuadratureRule {
 public:
  QuadratureRule(double k, std::vector<double> nodes, std::vector<double> weights);

  double k() const { return k_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

 private:
  double k_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Raised by integrate() when the integrand throws; carries the node index.
class NodeEvaluationError : public std::runtime_error {
 public:
  NodeEvaluationError(int index, double node, const std::string& what)
      : std::runtime_error("integrand failed at node " + std::to_string(index) + " (u=" +
                           std::to_string(node) + "): " + what),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Nodes are the eigenvalues of the Jacobi matrix of the symmetric Jacobi
/// polynomials with parameters (k-1, k-1), polished by one Newton step;
/// weights are Christoffel numbers 1 / sum_j phat_j(u)^2.
QuadratureRule gauss_jacobi_rule(int npoints, double k);

/// B(1/2, k) = sqrt(pi) Gamma(k) / Gamma(k + 1/2), the total mass.
double beta_half(double k);

/// int_{-1}^{1} u^(2j) (1-u^2)^(k-1) du = B(j + 1/2, k).
double even_moment(int j, double k);

/// Gamma(k + 1/2) / (Gamma(k) sqrt(pi)) = 1 / B(1/2, k).
double normalization_c(double k);

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  CompensatedSum acc;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double v;
    try {
      v = f(nodes[i]);
    } catch (const std::exception& e) {
      throw NodeEvaluationError(static_cast<int>(i), nodes[i], e.what());
    }
    acc.add(weights[i] * v);
  }
  return acc.value();
}

}  // namespace jackprod
