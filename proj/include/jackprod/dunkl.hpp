#pragma once

#include <map>
#include <string>
#include <utility>

#include "jackprod/bessel.hpp"
#include "jackprod/rational.hpp"

namespace jackprod {

/// Polynomial in two variables with exact coefficients, not necessarily
/// symmetric. Keys are exponent pairs (i, j) of x1^i x2^j.
class Poly2 {
 public:
  using Exponent = std::pair<int, int>;

  Poly2() = default;
  static Poly2 constant(const Rational& c);
  static Poly2 monomial(int i, int j, const Rational& c = Rational(1));

  void add(int i, int j, const Rational& c);
  Rational coeff(int i, int j) const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Component of total degree d.
  Poly2 homogeneous_part(int d) const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Rational& c, Poly2 p) { return p *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  bool operator==(const Poly2&) const = default;

  Poly2 derivative(int direction) const;

  /// p(a x1 + b x2, c x1 + d x2)
  Poly2 compose_linear(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;

  std::string to_string() const;

 private:
  std::map<Exponent, Rational> terms_;
};

/// T_1 or T_2 of type B2 (direction 1 or 2), exactly.
Poly2 dunkl_apply(const Poly2& p, const Multiplicity& kappa, int direction);

struct IntertwiningResult {
  bool holds;
  std::string counterexample;  // empty when holds
};

/// T_1^k(f o r) = (T_1^k' f - T_2^k' f) o r / sqrt(2) and
/// T_2^k(f o r) = (T_1^k' f + T_2^k' f) o r / sqrt(2), checked per
/// homogeneous degree with the scaled map (x1+x2, -x1+x2) so the powers of
/// sqrt(2) cancel.
IntertwiningResult check_rotation_intertwining(const Poly2& p, const Multiplicity& kappa);

}  // namespace jackprod
