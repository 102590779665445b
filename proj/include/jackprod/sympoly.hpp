#pragma once

#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackprod/partition.hpp"
#include "jackprod/rational.hpp"

namespace jackprod {

/// Symmetric polynomial in `nvars` variables written in the monomial basis
/// m_mu (sum of DISTINCT monomials with exponent multiset mu). Zero
/// coefficients are never stored.
template <class T>
class MonomialExpansion {
 public:
  explicit MonomialExpansion(int nvars);

  static MonomialExpansion monomial(const Partition& mu, int nvars);

  int nvars() const { return nvars_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Adds c * m_mu.
  void add(const Partition& mu, const T& c);
  T coeff(const Partition& mu) const;

  const std::map<Partition, T>& terms() const { return coeffs_; }

  bool is_homogeneous() const;
  /// Common weight of all keys; -1 for the zero polynomial.
  int degree() const;

  MonomialExpansion& operator+=(const MonomialExpansion& other);
  MonomialExpansion& operator*=(const T& c);

  bool operator==(const MonomialExpansion& other) const = default;

 private:
  int nvars_;
  std::map<Partition, T> coeffs_;
};

template <class T>
MonomialExpansion<T> operator*(const T& c, MonomialExpansion<T> p) {
  p *= c;
  return p;
}

template <class T>
MonomialExpansion<T> operator+(MonomialExpansion<T> a, const MonomialExpansion<T>& b) {
  a += b;
  return a;
}

/// m_lambda(x) over the variables of x.
template <class T>
T monomial_eval(const Partition& lambda, std::span<const T> x);

template <class T>
T eval(const MonomialExpansion<T>& p, std::span<const T> x);

/// Exact action of D_k = sum x_i^2 d_i^2 + 2k sum_{i!=j} x_i^2/(x_i-x_j) d_i
/// on a homogeneous symmetric polynomial.
template <class T>
T eval(const MonomialExpansion<T>& p, const std::vector<T>& x) {
  return eval<T>(p, std::span<const T>(x));
}

template <class T>
MonomialExpansion<T> apply_lb_operator(const MonomialExpansion<T>& p, const T& k);

/// Multiplies a two-variable expansion by (x1 x2)^c.
template <class T>
MonomialExpansion<T> scale_by_rectangle(const MonomialExpansion<T>& p, int c);

/// [{ "partition": [..], "coefficient": "p/q" }, ...]
nlohmann::json to_json(const MonomialExpansion<Rational>& p);

extern template class MonomialExpansion<Rational>;
extern template class MonomialExpansion<double>;

}  // namespace jackprod
