#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jackprod/errors.hpp"
#include "jackprod/rational.hpp"

namespace jackprod {

/// Weakly decreasing tuple of nonnegative integers with trailing zeros
/// trimmed. Indexing past the last nonzero part yields 0, so (m) and (m,0)
/// are the same value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "3,1", "3,1,0" or "" (empty partition).
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to `n` entries; requires length() <= n.
  std::vector<int> padded(int n) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Jack parameter k = 1/alpha, held exactly.
class JackParameter {
 public:
  explicit JackParameter(Rational k);
  explicit JackParameter(std::string_view text) : JackParameter(parse_rational(text)) {}

  const Rational& value() const { return k_; }
  Rational alpha() const { return Rational(1) / k_; }
  double to_double() const { return jackprod::to_double(k_); }

 private:
  Rational k_;
};

/// mu <= lambda in dominance order; partitions of different weight are
/// incomparable.
bool dominance_leq(const Partition& mu, const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// All partitions of d with at most max_parts parts, decreasing
/// lexicographic order (a linear extension of dominance).
std::vector<Partition> partitions_of_weight(int d, int max_parts);

/// (a)_m = a (a+1) ... (a+m-1).
template <class T>
T rising_factorial(const T& a, int m) {
  T r(1);
  for (int i = 0; i < m; ++i) r *= a + T(i);
  return r;
}

/// Eigenvalue sum_i lambda_i (lambda_i + 2k(n-i) - 1) of the defining
/// operator on P_lambda in n variables.
template <class T>
T eigenvalue_e(const Partition& lambda, const T& k, int n) {
  if (lambda.length() > n) {
    throw DomainError("eigenvalue_e: partition " + lambda.to_string() + " longer than n=" +
                      std::to_string(n));
  }
  T e(0);
  for (int i = 1; i <= lambda.length(); ++i) {
    const int li = lambda[static_cast<std::size_t>(i - 1)];
    e += T(li) * (T(li) + T(2) * k * T(n - i) - T(1));
  }
  return e;
}

/// prod over cells (i,j) of (lambda_i - j + 1 + k(lambda'_j - i)).
template <class T>
T hook_product_h(const Partition& lambda, const T& k) {
  const Partition conj = conjugate(lambda);
  T h(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    const int li = lambda[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= li; ++j) {
      h *= T(li - j + 1) + k * T(conj[static_cast<std::size_t>(j - 1)] - i);
    }
  }
  return h;
}

/// [mu]_lambda = prod_{j=1}^{n} (mu - k(j-1))_{lambda_j}.
template <class T>
T gen_pochhammer(const T& mu, const Partition& lambda, const T& k, int n) {
  if (lambda.length() > n) {
    throw DomainError("gen_pochhammer: partition " + lambda.to_string() + " longer than n=" +
                      std::to_string(n));
  }
  T r(1);
  for (int j = 1; j <= lambda.length(); ++j) {
    r *= rising_factorial<T>(mu - k * T(j - 1), lambda[static_cast<std::size_t>(j - 1)]);
  }
  return r;
}

}  // namespace jackprod
