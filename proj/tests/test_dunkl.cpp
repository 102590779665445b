#include <doctest.h>

#include "jackprod/dunkl.hpp"

using namespace jackprod;

namespace {

Rational at(const Poly2& p, const Rational& a, const Rational& b) {
  Rational s(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (int r = 0; r < e.first; ++r) t *= a;
    for (int r = 0; r < e.second; ++r) t *= b;
    s += t;
  }
  return s;
}

// The difference-reflection formula evaluated at one point with all
// denominators nonzero.
Rational dunkl_pointwise(const Poly2& f, const Multiplicity& kappa, int dir, const Rational& a, const Rational& b) {
  const Rational& k1 = kappa.kappa1();
  const Rational& k2 = kappa.kappa2();
  const Rational fx = at(f, a, b);
  const Rational swap = fx - at(f, b, a);
  const Rational neg_swap = fx - at(f, -b, -a);
  if (dir == 1) {
    return at(f.derivative(1), a, b) + k1 * (fx - at(f, -a, b)) / a + k2 * swap / (a - b) + k2 * neg_swap / (a + b);
  }
  return at(f.derivative(2), a, b) + k1 * (fx - at(f, a, -b)) / b + k2 * swap / (b - a) + k2 * neg_swap / (a + b);
}

std::vector<Poly2> monomials_up_to(int degree) {
  std::vector<Poly2> out;
  for (int d = 0; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) out.push_back(Poly2::monomial(i, d - i));
  }
  return out;
}

const std::vector<Multiplicity> kKappas{Multiplicity(Rational(1), Rational(1)),
                                        Multiplicity(Rational(1, 2), Rational(3, 2)),
                                        Multiplicity(Rational(4, 5), Rational(13, 10))};

}  // namespace

TEST_CASE("Poly2 arithmetic") {
  const Poly2 x1 = Poly2::monomial(1, 0);
  const Poly2 x2 = Poly2::monomial(0, 1);
  const Poly2 sq = (x1 + x2) * (x1 + x2);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(Poly2().degree() == -1);
  CHECK(sq.derivative(1) == Rational(2) * x1 + Rational(2) * x2);
  CHECK(sq.homogeneous_part(1).is_zero());
  // (x1 + x2)^2 at (x1 - x2, x1 + x2) = 4 x1^2
  CHECK(sq.compose_linear(Rational(1), Rational(-1), Rational(1), Rational(1)) == Poly2::monomial(2, 0, Rational(4)));
  CHECK(Poly2::constant(Rational(0)).is_zero());
}

TEST_CASE("Dunkl operator examples") {
  const Multiplicity kappa(Rational(2, 3), Rational(5, 7));
  const Poly2 x1 = Poly2::monomial(1, 0);
  CHECK(dunkl_apply(x1, kappa, 1) == Poly2::constant(1 + 2 * kappa.kappa1() + 2 * kappa.kappa2()));
  CHECK(dunkl_apply(x1, kappa, 2).is_zero());
  CHECK(dunkl_apply(Poly2::constant(Rational(3)), kappa, 1).is_zero());
  CHECK_THROWS(dunkl_apply(x1, kappa, 3));
}

TEST_CASE("Dunkl operator matches the pointwise formula") {
  const Rational a(3, 2);
  const Rational b(-2, 7);
  for (const auto& kappa : kKappas) {
    for (const auto& m : monomials_up_to(6)) {
      for (int dir : {1, 2}) CHECK(at(dunkl_apply(m, kappa, dir), a, b) == dunkl_pointwise(m, kappa, dir, a, b));
    }
    const Poly2 mixed = Poly2::monomial(3, 1, Rational(2)) + Poly2::monomial(0, 2, Rational(-5, 3)) + Poly2::constant(Rational(1));
    CHECK(at(dunkl_apply(mixed, kappa, 1), a, b) == dunkl_pointwise(mixed, kappa, 1, a, b));
  }
}

TEST_CASE("Dunkl operators lower degree and commute") {
  for (const auto& kappa : kKappas) {
    for (const auto& m : monomials_up_to(6)) {
      const Poly2 t1 = dunkl_apply(m, kappa, 1);
      CHECK(t1.degree() <= m.degree() - 1);
      CHECK(dunkl_apply(t1, kappa, 2) == dunkl_apply(dunkl_apply(m, kappa, 2), kappa, 1));
    }
  }
}

TEST_CASE("rotation intertwining") {
  const Poly2 x1 = Poly2::monomial(1, 0);
  const Poly2 x1x2 = Poly2::monomial(1, 1);
  const Poly2 radial = Poly2::monomial(2, 0) + Poly2::monomial(0, 2);
  for (const auto& kappa : kKappas) {
    CHECK(check_rotation_intertwining(x1, kappa).holds);
    CHECK(check_rotation_intertwining(x1x2, kappa).holds);
    CHECK(check_rotation_intertwining(radial, kappa).holds);
    for (const auto& m : monomials_up_to(6)) {
      const auto r = check_rotation_intertwining(m, kappa);
      CHECK_MESSAGE(r.holds, r.counterexample);
    }
  }
}

TEST_CASE("intertwining needs the swapped multiplicity") {
  const Multiplicity kappa(Rational(1, 2), Rational(3, 2));
  const Rational one(1);
  const Rational minus_one(-1);
  bool mismatch = false;
  for (const auto& f : monomials_up_to(4)) {
    const Poly2 rotated = f.compose_linear(one, one, minus_one, one);
    const Poly2 wrong = (dunkl_apply(f, kappa, 1) - dunkl_apply(f, kappa, 2)).compose_linear(one, one, minus_one, one);
    if (dunkl_apply(rotated, kappa, 1) != wrong) mismatch = true;
  }
  CHECK(mismatch);
}
