#pragma once

#include <utility>

#include "jackprod/partition.hpp"
#include "jackprod/quadrature.hpp"
#include "jackprod/report.hpp"

namespace jackprod {

/// Eigenvalues X1 >= X2 of s^(1/2) k t k' s^(1/2) for s = diag(x),
/// t = diag(y), parametrized by u = cos(2 theta), together with the scalars
/// alpha = X1 + X2, a and a_bar.
struct SplitPair {
  double alpha_split;
  double a;
  double a_bar;
  double x1_big;
  double x2_small;
  double discriminant;
};

SplitPair eigen_split(Pair x, Pair y, double u);

/// Same eigenvalues from the explicit 2x2 matrix at angle theta, sorted
/// decreasing.
std::pair<double, double> rotation_conjugate_eigs(Pair x, Pair y, double theta);

/// P(x) P(y) / P(1,1)
double product_lhs(const Partition& lambda, double k, Pair x, Pair y);

/// c_k int P(X1(u), X2(u)) (1-u^2)^(k-1) du
double product_rhs(const Partition& lambda, double k, Pair x, Pair y, int npoints);
double product_rhs(const Partition& lambda, const QuadratureRule& rule, Pair x, Pair y);

VerificationReport verify_product(const Partition& lambda, double k, Pair x, Pair y, int npoints,
                                  double tol);

/// Normalized SO(2) average of P^{1/2} over equispaced angles.
double zonal_so2_average(const Partition& lambda, Pair x, Pair y, int ntheta);

/// Default rule size used by the verification harnesses.
inline int default_npoints(const Partition& lambda) { return std::max(32, lambda.weight() + 4); }

}  // namespace jackprod
