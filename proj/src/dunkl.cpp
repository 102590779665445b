#include "jackprod/dunkl.hpp"

#include <algorithm>
#include <stdexcept>

#include "jackprod/errors.hpp"

namespace jackprod {

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, const Rational& c) {
  Poly2 p;
  p.add(i, j, c);
  return p;
}

void Poly2::add(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw DomainError("Poly2: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Poly2 Poly2::homogeneous_part(int d) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second == d) out.terms_.emplace(e, c);
  }
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return out;
}

Poly2 Poly2::derivative(int direction) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    const int power = direction == 1 ? e.first : e.second;
    if (power == 0) continue;
    if (direction == 1) {
      out.add(e.first - 1, e.second, c * power);
    } else {
      out.add(e.first, e.second - 1, c * power);
    }
  }
  return out;
}

Poly2 Poly2::compose_linear(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const {
  const Poly2 first = monomial(1, 0, a) + monomial(0, 1, b);
  const Poly2 second = monomial(1, 0, c) + monomial(0, 1, d);
  const int deg = std::max(degree(), 0);
  std::vector<Poly2> first_pow{constant(1)}, second_pow{constant(1)};
  for (int i = 1; i <= deg; ++i) {
    first_pow.push_back(first_pow.back() * first);
    second_pow.push_back(second_pow.back() * second);
  }
  Poly2 out;
  for (const auto& [e, coeff] : terms_) {
    out += coeff * (first_pow[static_cast<std::size_t>(e.first)] * second_pow[static_cast<std::size_t>(e.second)]);
  }
  return out;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.get_str() + ")";
    if (it->first.first) s += "*x1^" + std::to_string(it->first.first);
    if (it->first.second) s += "*x2^" + std::to_string(it->first.second);
  }
  return s;
}

namespace {

// p(-x1, x2), p(x1, -x2), p(x2, x1), p(-x2, -x1)
Poly2 reflect_sign(const Poly2& p, int direction) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    const int power = direction == 1 ? e.first : e.second;
    out.add(e.first, e.second, power % 2 ? Rational(-c) : c);
  }
  return out;
}

Poly2 reflect_swap(const Poly2& p, bool negate) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    out.add(e.second, e.first, negate && (e.first + e.second) % 2 ? Rational(-c) : c);
  }
  return out;
}

// Exact division by x_direction.
Poly2 divide_by_variable(const Poly2& p, int direction) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    const int power = direction == 1 ? e.first : e.second;
    if (power == 0) throw std::logic_error("dunkl: numerator not divisible by x" + std::to_string(direction));
    out.add(e.first - (direction == 1), e.second - (direction == 2), c);
  }
  return out;
}

// Exact division by x1 - s x2, s = +-1, by synthetic division of each
// homogeneous component in t = x1/x2.
Poly2 divide_by_linear(const Poly2& p, int s) {
  Poly2 out;
  const int deg = p.degree();
  for (int d = 0; d <= deg; ++d) {
    std::vector<Rational> a(static_cast<std::size_t>(d + 1), Rational(0));
    bool any = false;
    for (int i = 0; i <= d; ++i) {
      a[static_cast<std::size_t>(i)] = p.coeff(i, d - i);
      any = any || a[static_cast<std::size_t>(i)] != 0;
    }
    if (!any) continue;
    if (d == 0) throw std::logic_error("dunkl: nonzero constant is not divisible by a linear form");
    std::vector<Rational> b(static_cast<std::size_t>(d), Rational(0));
    b[static_cast<std::size_t>(d - 1)] = a[static_cast<std::size_t>(d)];
    for (int i = d - 1; i >= 1; --i) {
      b[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(i)] + s * b[static_cast<std::size_t>(i)];
    }
    if (a[0] + s * b[0] != 0) {
      throw std::logic_error("dunkl: numerator not divisible by x1 " + std::string(s > 0 ? "-" : "+") + " x2");
    }
    for (int i = 0; i < d; ++i) out.add(i, d - 1 - i, b[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

Poly2 dunkl_apply(const Poly2& p, const Multiplicity& kappa, int direction) {
  if (direction != 1 && direction != 2) throw DomainError("dunkl_apply: direction must be 1 or 2");
  Poly2 out = p.derivative(direction);
  out += kappa.kappa1() * divide_by_variable(p - reflect_sign(p, direction), direction);
  const Poly2 swap_term = kappa.kappa2() * divide_by_linear(p - reflect_swap(p, false), 1);
  const Poly2 neg_swap_term = kappa.kappa2() * divide_by_linear(p - reflect_swap(p, true), -1);
  if (direction == 1) {
    out += swap_term;
  } else {
    out -= swap_term;
  }
  out += neg_swap_term;
  return out;
}

IntertwiningResult check_rotation_intertwining(const Poly2& p, const Multiplicity& kappa) {
  const Multiplicity swapped = kappa.swapped();
  const Rational one(1);
  const Rational minus_one(-1);
  auto rotate = [&](const Poly2& f) { return f.compose_linear(one, one, minus_one, one); };
  for (int d = 0; d <= p.degree(); ++d) {
    const Poly2 f = p.homogeneous_part(d);
    if (f.is_zero()) continue;
    const Poly2 rotated = rotate(f);
    const Poly2 t1 = dunkl_apply(f, swapped, 1);
    const Poly2 t2 = dunkl_apply(f, swapped, 2);
    const Poly2 lhs1 = dunkl_apply(rotated, kappa, 1);
    const Poly2 rhs1 = rotate(t1 - t2);
    if (lhs1 != rhs1) {
      return {false, "T1 at degree " + std::to_string(d) + ": " + lhs1.to_string() + " != " + rhs1.to_string()};
    }
    const Poly2 lhs2 = dunkl_apply(rotated, kappa, 2);
    const Poly2 rhs2 = rotate(t1 + t2);
    if (lhs2 != rhs2) {
      return {false, "T2 at degree " + std::to_string(d) + ": " + lhs2.to_string() + " != " + rhs2.to_string()};
    }
  }
  return {true, ""};
}

}  // namespace jackprod
