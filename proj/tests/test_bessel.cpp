#include <doctest.h>

#include <cmath>

#include "jackprod/bessel.hpp"
#include "jackprod/jack.hpp"
#include "jackprod/quadrature.hpp"
#include "jackprod/random.hpp"

using namespace jackprod;

namespace {

double normalized_by_std(double nu, double t) {
  return std::tgamma(nu + 1) * std::pow(t / 2, -nu) * std::cyl_bessel_i(nu, t);
}

}  // namespace

TEST_CASE("normalized modified Bessel function") {
  CHECK(bessel_i_norm(0.0, 0.0) == 1.0);
  CHECK(bessel_i_norm(2.5, 0.0) == 1.0);
  CHECK(bessel_i_norm(-0.5, 0.0) == 1.0);
  for (double t : {0.1, 1.0, 3.0, 7.0}) {
    CHECK(bessel_i_norm(0.5, t) == doctest::Approx(std::sinh(t) / t).epsilon(1e-14));
    CHECK(bessel_i_norm(-0.5, t) == doctest::Approx(std::cosh(t)).epsilon(1e-14));
  }
  for (double nu : {0.0, 0.3, 1.6, 2.5, 4.25}) {
    for (double t : {0.1, 1.0, 5.0, 10.0}) {
      CHECK(bessel_i_norm(nu, t) == doctest::Approx(normalized_by_std(nu, t)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(bessel_i_norm(-1.0, 1.0), DomainError);
}

TEST_CASE("normalized Bessel function solves its ODE") {
  // f'' + (2nu+1)/t f' - f = 0, checked with fourth-order central differences.
  const double h = 1e-3;
  for (double nu : {0.0, 0.7, 2.0}) {
    for (double t : {0.5, 1.5, 4.0}) {
      auto f = [&](double s) { return bessel_i_norm(nu, s); };
      const double d1 = (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h);
      const double d2 = (-f(t - 2 * h) + 16 * f(t - h) - 30 * f(t) + 16 * f(t + h) - f(t + 2 * h)) / (12 * h * h);
      const double residual = d2 + (2 * nu + 1) / t * d1 - f(t);
      CHECK(std::abs(residual) < 1e-7 * f(t));
    }
  }
}

TEST_CASE("Multiplicity") {
  const auto m = Multiplicity::parse("0.8,1.3");
  CHECK(m.kappa1() == Rational(4, 5));
  CHECK(m.kappa2() == Rational(13, 10));
  CHECK(m.order_mu() == doctest::Approx(2.6));
  CHECK(m.swapped().kappa1() == Rational(13, 10));
  CHECK(Multiplicity::parse("1/2,3/2").k2() == 1.5);
  CHECK_THROWS_AS(Multiplicity::parse("1"), ParseError);
  CHECK_THROWS_AS(Multiplicity::parse("a,b"), ParseError);
  CHECK_THROWS_AS(Multiplicity::parse("0,1"), ParseError);
  CHECK_THROWS_AS(Multiplicity(Rational(1), Rational(-1)), DomainError);
}

TEST_CASE("hyp0f1_two series") {
  CHECK(hyp0f1_two(2.0, 1.0, {0.3, 0.7}, {0, 0}, 20).value == 1.0);
  CHECK(hyp0f1_two(2.0, 1.0, {0, 0}, {0, 0}, 20).value == 1.0);
  // degree one: 1 + P_(1)(x) P_(1)(y) / (mu * 1 * 2)
  const double mu = 2.3;
  const Pair x{0.3, 0.7};
  const Pair y{0.2, 0.9};
  const auto one = hyp0f1_two(mu, 1.5, x, y, 1);
  CHECK(one.value == doctest::Approx(1.0 + (1.0 * 1.1) / (2 * mu)).epsilon(1e-15));
  CHECK(one.truncation == doctest::Approx(1.1 / (2 * mu)).epsilon(1e-15));
  double prev = one.truncation;
  for (int d = 4; d <= 32; d += 4) {
    const auto s = hyp0f1_two(mu, 1.5, x, y, d);
    CHECK(s.truncation < prev);
    prev = s.truncation;
  }
  CHECK_THROWS_AS(hyp0f1_two(mu, 1.5, x, y, -1), DomainError);
}

TEST_CASE("hyp0f1_two pole handling") {
  // [1]_lambda vanishes for lambda = (1,1) when k = 1.
  CHECK_THROWS_AS(hyp0f1_two(1.0, 1.0, {0.5, 0.4}, {0.3, 0.2}, 4), PoleError);
  // With y = (c, 0) every l(lambda) = 2 term has P(y) = 0 and is skipped.
  CHECK_NOTHROW(hyp0f1_two(1.0, 1.0, {0.5, 0.4}, {1.0, 0.0}, 4));
}

TEST_CASE("0F1 with one trivial argument as a single integral") {
  CHECK(hyp0f1_lemma4(2.0, 1.0, {0, 0}, 16) == doctest::Approx(1.0).epsilon(1e-15));
  for (double mu : {1.0, 1.5, 2.4}) {
    for (double k : {0.5, 1.0, 2.0}) {
      const double s = 0.6;
      CHECK(hyp0f1_lemma4(mu, k, {s, s}, 64) == doctest::Approx(bessel_i_norm(mu - 1, 2 * std::sqrt(s))).epsilon(1e-13));
      const Pair x{1.0, 0.3};
      CHECK(hyp0f1_lemma4(mu, k, x, 64) == doctest::Approx(hyp0f1_two(mu, k, x, {1, 0}, 40).value).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(hyp0f1_lemma4(2.0, 1.0, {-0.1, 0}, 16), DomainError);
}

TEST_CASE("B2 Bessel series") {
  const Multiplicity kappa(Rational(1), Rational(1));
  CHECK(bessel_b2_series(kappa, {0.4, 0.9}, {0, 0}, 30).value == 1.0);
  CHECK(bessel_b2_series(kappa, {0, 0}, {0.4, 0.9}, 30).value == 1.0);
  const double a = bessel_b2_series(kappa, {0.5, 0.2}, {0.3, 0.1}, 30).value;
  CHECK(bessel_b2_series(kappa, {0.3, 0.1}, {0.5, 0.2}, 30).value == doctest::Approx(a).epsilon(1e-15));
}

TEST_CASE("B2 Bessel double integral") {
  const Multiplicity k11(Rational(1), Rational(1));
  CHECK(bessel_b2_theorem3(k11, {0, 0}, {0.4, 0.2}, 32, 32, Theorem3Order::kMuMinusOne) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const double series = bessel_b2_series(k11, {0.5, 0.2}, {0.3, 0.1}, 30).value;
  CHECK(bessel_b2_theorem3(k11, {0.5, 0.2}, {0.3, 0.1}, 64, 64, Theorem3Order::kMuMinusOne) ==
        doctest::Approx(series).epsilon(1e-8));
  const auto k2 = Multiplicity::parse("0.8,1.3");
  const double s2 = bessel_b2_series(k2, {0.6, 0.2}, {0.4, 0.1}, 30).value;
  CHECK(bessel_b2_theorem3(k2, {0.6, 0.2}, {0.4, 0.1}, 64, 64, Theorem3Order::kMuMinusOne) ==
        doctest::Approx(s2).epsilon(1e-7));
}

TEST_CASE("double integral with equal coordinates reduces to one integral") {
  const auto kappa = Multiplicity::parse("0.7,1.2");
  const double s = 0.6;
  const double t = 0.5;
  const double order = theorem3_order_value(kappa, Theorem3Order::kMuMinusOne);
  const auto rule = gauss_jacobi_rule(64, kappa.k1());
  const double single = normalization_c(kappa.k1()) * integrate(rule, [&](double v) {
                          return bessel_i_norm(order, std::sqrt(2 * s * s * t * t * (1 + v)));
                        });
  CHECK(bessel_b2_theorem3(kappa, {s, s}, {t, t}, 64, 64, order) == doctest::Approx(single).epsilon(1e-13));
}

TEST_CASE("double integral order resolution") {
  for (const char* text : {"1,1", "0.8,1.3", "1/2,1/2"}) {
    const auto res = resolve_theorem3_order(Multiplicity::parse(text));
    CHECK(res.selected == Theorem3Order::kMuMinusOne);
    CHECK(res.max_err_mu_minus_one < 1e-7);
    CHECK(res.max_err_mu > 1e-3);
    CHECK(res.order == doctest::Approx(Multiplicity::parse(text).order_mu() - 1));
  }
  CHECK(to_string(Theorem3Order::kMu) == "mu");
}

TEST_CASE("rotation symmetry") {
  const Multiplicity k11(Rational(1), Rational(1));
  CHECK(bessel_rotation_symmetry(k11, {0, 0}, {0, 0}, 30).pass);
  CHECK(bessel_rotation_symmetry(k11, {0.5, 0.1}, {0.2, 0.3}, 30).pass);
  const auto kappa = Multiplicity::parse("0.7,1.4");
  const Pair x{1.5, 0.3};
  const Pair y{0.9, 1.2};
  const auto r = bessel_rotation_symmetry(kappa, x, y, 40);
  CHECK(r.pass);
  CHECK(r.rel_err < 1e-12);
  // rotating without swapping the multiplicities breaks the identity
  const double c = 1 / std::sqrt(2.0);
  const Pair rx{c * (x[0] + x[1]), c * (x[1] - x[0])};
  const Pair ry{c * (y[0] + y[1]), c * (y[1] - y[0])};
  CHECK(r.rhs == doctest::Approx(bessel_b2_series(kappa.swapped(), rx, ry, 40).value).epsilon(1e-15));
  const double wrong = bessel_b2_series(kappa, rx, ry, 40).value;
  CHECK(std::abs(r.lhs - wrong) > 1e3 * std::abs(r.lhs - r.rhs));
}

TEST_CASE("classical Bessel product formula") {
  for (double k : {0.5, 1.0, 1.5}) {
    CHECK(bessel_product_identity(k, 0.0, 0.0, 64).pass);
    CHECK(bessel_product_identity(k, 1.0, 2.0, 64).pass);
    CHECK(bessel_product_identity(k, 5.0, 5.0, 64).pass);
  }
  // k = 1/2: I_0(x) I_0(y) = (1/pi) int I_0(sqrt(x^2+y^2+2uxy)) / sqrt(1-u^2) du
  const auto r = bessel_product_identity(0.5, 1.0, 2.0, 64);
  CHECK(r.lhs == doctest::Approx(std::cyl_bessel_i(0.0, 1.0) * std::cyl_bessel_i(0.0, 2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_product_identity(0.0, 1.0, 1.0, 8), DomainError);
}

TEST_CASE("limit transition") {
  CHECK(limit_transition(1.0, 0.0, 8) == doctest::Approx(1.0).epsilon(1e-14));
  for (double k : {0.5, 1.0}) {
    const double target = bessel_i_norm(k - 0.5, 1.0);
    double prev = INFINITY;
    for (int ell : {8, 16, 32, 64, 128}) {
      const double err = std::abs(limit_transition(k, 1.0, ell) - target);
      CHECK(err < prev);
      prev = err;
    }
    const double first = std::abs(limit_transition(k, 1.0, 8) - target);
    CHECK(prev < first / 8);
  }
  CHECK(bessel_i_norm(0.0, 1.0) == doctest::Approx(std::cyl_bessel_i(0.0, 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(limit_transition(1.0, 2.0, 1), DomainError);
}
