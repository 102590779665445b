#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackprod/partition.hpp"
#include "jackprod/sympoly.hpp"

namespace jackprod {

/// P_lambda^k in `nvars` variables: monic in m_lambda, supported on
/// partitions dominated by lambda.
struct JackPolynomial {
  Partition lambda;
  Rational k;
  int nvars;
  MonomialExpansion<Rational> expansion;

  Rational operator()(std::span<const Rational> x) const { return eval(expansion, x); }
  double operator()(std::span<const double> x) const;
};

/// Triangular eigen-solve in exact arithmetic. Results are memoized per
/// (lambda, k, n); the cache is safe for concurrent readers.
JackPolynomial jack_p(const Partition& lambda, const JackParameter& k, int n);
JackPolynomial jack_p_uncached(const Partition& lambda, const JackParameter& k, int n);
void clear_jack_cache();

/// Two-variable closed form. With s = (x1+x2)/2, d = (x1-x2)/2,
/// m = lambda_1 - lambda_2 and l = lambda_2:
///   P = (x1 x2)^l (2k)_m/(k)_m sum_j C(m,2j) s^(m-2j) d^(2j) (1/2)_j/(k+1/2)_j,
/// which is the u-integral over (1-u^2)^(k-1) evaluated through its Beta
/// moments. Exact for T = Rational.
template <class T>
T jack_p_two_var(const Partition& lambda, const T& k, const T& x1, const T& x2) {
  if (lambda.length() > 2) {
    throw DomainError("jack_p_two_var: " + lambda.to_string() + " has more than two parts");
  }
  const int m = lambda[0] - lambda[1];
  const int l = lambda[1];
  const T half(T(1) / T(2));
  const T s = (x1 + x2) * half;
  const T d = (x1 - x2) * half;
  const T d2 = d * d;

  // term_j = C(m,2j) s^(m-2j) d^(2j) (1/2)_j/(k+1/2)_j, built by ratios
  // of consecutive terms so that s = 0 needs no special casing.
  std::vector<T> s_pow(static_cast<std::size_t>(m + 1), T(1));
  for (int i = 1; i <= m; ++i) s_pow[static_cast<std::size_t>(i)] = s_pow[static_cast<std::size_t>(i - 1)] * s;
  T sum(0);
  T d_part(1);  // C(m,2j) d^(2j) (1/2)_j/(k+1/2)_j
  for (int j = 0; 2 * j <= m; ++j) {
    if (j > 0) {
      d_part *= T((m - 2 * j + 2) * (m - 2 * j + 1)) / T((2 * j) * (2 * j - 1));
      d_part *= d2 * (T(j - 1) + half) / (k + half + T(j - 1));
    }
    sum += d_part * s_pow[static_cast<std::size_t>(m - 2 * j)];
  }
  T prefactor = rising_factorial<T>(T(2) * k, m) / rising_factorial<T>(k, m);
  T rect(1);
  const T prod = x1 * x2;
  for (int i = 0; i < l; ++i) rect *= prod;
  return rect * prefactor * sum;
}

/// P_lambda(1,...,1) from the solver.
Rational jack_p_at_ones(const Partition& lambda, const JackParameter& k, int n);

/// Two-variable P_lambda(1,1) = (2k)_m/(k)_m, i.e.
/// Gamma(m+2k)Gamma(k)/(Gamma(m+k)Gamma(2k)).
template <class T>
T jack_p_at_ones_two_var(const Partition& lambda, const T& k) {
  if (lambda.length() > 2) throw DomainError("jack_p_at_ones_two_var: more than two parts");
  const int m = lambda[0] - lambda[1];
  return rising_factorial<T>(T(2) * k, m) / rising_factorial<T>(k, m);
}

/// C_lambda^k = (|lambda|! / h_k(lambda)) P_lambda^k.
Rational jack_c_factor(const Partition& lambda, const JackParameter& k);
Rational jack_c(const Partition& lambda, const JackParameter& k, int n, std::span<const Rational> x);
MonomialExpansion<Rational> jack_c_expansion(const Partition& lambda, const JackParameter& k, int n);

struct LiftOptions {
  int npoints = 48;
  bool parallel = true;
};

/// P_lambda(x) in n in {2, 3} variables from the (n-1)-variable polynomial
/// through the interlacing integral over x_1 <= nu_1 <= x_2 <= ... <= x_n:
///   P(x) = prod_{i<n} Gamma(l_i+(n-i+1)k)/(Gamma(l_i+(n-i)k)Gamma(k))
///          V(x)^(1-2k) int P(nu) V(nu) prod_{i,j} |x_i - nu_j|^(k-1) dnu.
/// Each nu_j ranges over [x_j, x_{j+1}] with a Gauss-Jacobi rule absorbing
/// the endpoint singularities.
double jack_recursion_lift(const Partition& lambda, double k, std::span<const double> x,
                           const LiftOptions& options = {});

/// {lambda, k, nvars, terms:[{partition, coeff}]}
nlohmann::json to_json(const JackPolynomial& p);

}  // namespace jackprod
