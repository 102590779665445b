#include <doctest.h>

#include <cmath>
#include <thread>

#include "jackprod/jack.hpp"
#include "jackprod/random.hpp"

using namespace jackprod;

namespace {

const std::vector<Rational> kKs{Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3)};

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (x_1+...+x_n)^d in the monomial basis: multinomial d!/prod(mu_i!).
MonomialExpansion<Rational> power_sum_one(int d, int n) {
  MonomialExpansion<Rational> p(n);
  for (const auto& mu : partitions_of_weight(d, n)) {
    Rational c = factorial(d);
    for (int part : mu.parts()) c /= factorial(part);
    p.add(mu, c);
  }
  return p;
}

}  // namespace

TEST_CASE("jack_p examples") {
  auto p = jack_p(Partition{1}, JackParameter(Rational(1, 2)), 2);
  CHECK(p.expansion.coeff(Partition{1}) == 1);
  CHECK(p.expansion.size() == 1);

  auto q = jack_p(Partition{1, 1}, JackParameter(Rational(1)), 2);
  CHECK(q.expansion.size() == 1);
  CHECK(q.expansion.coeff(Partition{1, 1}) == 1);

  for (const auto& kv : kKs) {
    auto r = jack_p(Partition{2}, JackParameter(kv), 2);
    CHECK(r.expansion.coeff(Partition{2}) == 1);
    CHECK(r.expansion.coeff(Partition{1, 1}) == 2 * kv / (kv + 1));
  }
  auto s = jack_p(Partition{2, 1}, JackParameter(Rational(1, 2)), 3);
  CHECK(s.expansion.coeff(Partition{2, 1}) == 1);
  CHECK(s.expansion.coeff(Partition{1, 1, 1}) == Rational(3, 2));
  const std::vector<Rational> x{Rational(1), Rational(2), Rational(3)};
  CHECK(s(x) == 57);

  CHECK_THROWS_AS(jack_p(Partition{1, 1, 1}, JackParameter(Rational(1)), 2), DomainError);
}

TEST_CASE("jack_p is monic, triangular and an LB eigenfunction") {
  for (const auto& kv : kKs) {
    const JackParameter k(kv);
    for (int n : {2, 3}) {
      for (int d = 0; d <= 7; ++d) {
        for (const auto& lambda : partitions_of_weight(d, n)) {
          const auto p = jack_p(lambda, k, n);
          CHECK(p.expansion.coeff(lambda) == 1);
          for (const auto& [mu, c] : p.expansion.terms()) CHECK(dominance_leq(mu, lambda));
          auto lhs = apply_lb_operator(p.expansion, kv);
          auto rhs = eigenvalue_e(lambda, kv, n) * p.expansion;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("C normalization sums to a power of p_1") {
  for (const auto& kv : kKs) {
    const JackParameter k(kv);
    for (int n : {2, 3}) {
      for (int d = 0; d <= 6; ++d) {
        MonomialExpansion<Rational> total(n);
        for (const auto& lambda : partitions_of_weight(d, n)) total += jack_c_expansion(lambda, k, n);
        CHECK(total == power_sum_one(d, n));
      }
    }
  }
}

TEST_CASE("jack_c examples") {
  const JackParameter k(Rational(1));
  const std::vector<Rational> x{Rational(1), Rational(2)};
  CHECK(jack_c(Partition{1}, k, 2, x) == 3);
  CHECK(jack_c(Partition{2}, k, 2, x) + jack_c(Partition{1, 1}, k, 2, x) == 9);
  CHECK(jack_c_factor(Partition{}, k) == 1);
  CHECK_THROWS_AS(jack_c(Partition{1}, k, 3, x), DomainError);
}

TEST_CASE("two-variable closed form matches the solver exactly") {
  const std::vector<std::pair<Rational, Rational>> pts{
      {Rational(1), Rational(2)}, {Rational(-3, 2), Rational(5, 7)}, {Rational(0), Rational(4)}, {Rational(2), Rational(2)}};
  for (const auto& kv : kKs) {
    for (int d = 0; d <= 8; ++d) {
      for (const auto& lambda : partitions_of_weight(d, 2)) {
        const auto p = jack_p(lambda, JackParameter(kv), 2);
        for (const auto& [a, b] : pts) {
          const std::vector<Rational> x{a, b};
          CHECK(jack_p_two_var<Rational>(lambda, kv, a, b) == p(x));
        }
      }
    }
  }
}

TEST_CASE("two-variable closed form examples") {
  CHECK(jack_p_two_var<Rational>(Partition{1}, Rational(1, 2), Rational(1), Rational(2)) == 3);
  CHECK(jack_p_two_var<Rational>(Partition{2}, Rational(1), Rational(1), Rational(1)) == 3);
  CHECK(jack_p_two_var<Rational>(Partition{1, 1}, Rational(5), Rational(2), Rational(3)) == 6);
  CHECK(jack_p_two_var<double>(Partition{3, 1}, 1.5, 0.4, 1.1) ==
        doctest::Approx(to_double(jack_p_two_var<Rational>(Partition{3, 1}, Rational(3, 2), Rational(2, 5),
                                                           Rational(11, 10))))
            .epsilon(1e-14));
  CHECK_THROWS_AS(jack_p_two_var<double>(Partition{1, 1, 1}, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("P at ones") {
  for (const auto& kv : kKs) {
    const double kd = to_double(kv);
    for (int m = 0; m <= 12; ++m) {
      const Partition lambda{m + 2, 2};
      const Rational closed = jack_p_at_ones_two_var<Rational>(lambda, kv);
      CHECK(jack_p_at_ones(lambda, JackParameter(kv), 2) == closed);
      const double gamma_form =
          std::exp(std::lgamma(m + 2 * kd) + std::lgamma(kd) - std::lgamma(m + kd) - std::lgamma(2 * kd));
      CHECK(to_double(closed) == doctest::Approx(gamma_form).epsilon(1e-12));
    }
  }
  CHECK(jack_p_at_ones(Partition{1}, JackParameter(Rational(1)), 3) == 3);
}

TEST_CASE("jack_p is homogeneous") {
  const JackParameter k(Rational(3, 2));
  const std::vector<Rational> x{Rational(1, 3), Rational(2), Rational(5, 4)};
  const Rational t(3, 7);
  std::vector<Rational> tx;
  for (const auto& v : x) tx.push_back(t * v);
  for (int d = 0; d <= 7; ++d) {
    Rational td(1);
    for (int i = 0; i < d; ++i) td *= t;
    for (const auto& lambda : partitions_of_weight(d, 3)) {
      const auto p = jack_p(lambda, k, 3);
      CHECK(p.expansion.degree() == d);
      CHECK(p(tx) == td * p(x));
    }
  }
}

TEST_CASE("cache is consistent across threads") {
  clear_jack_cache();
  const JackParameter k(Rational(7, 3));
  const Partition lambda{4, 2, 1};
  const auto reference = jack_p_uncached(lambda, k, 3);
  std::vector<MonomialExpansion<Rational>> got(8, MonomialExpansion<Rational>(3));
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) {
    threads.emplace_back([&, i] { got[i] = jack_p(lambda, k, 3).expansion; });
  }
  for (auto& t : threads) t.join();
  for (const auto& g : got) CHECK(g == reference.expansion);
}

TEST_CASE("recursion lift reproduces the polynomial") {
  SampleStream rng(7);
  for (double kd : {0.5, 1.0, 2.0}) {
    const Rational kr = parse_rational(std::to_string(kd));
    for (int d = 0; d <= 4; ++d) {
      for (const auto& lambda : partitions_of_weight(d, 2)) {
        const auto p = jack_p(lambda, JackParameter(kr), 3);
        std::vector<double> x{0.3, 1.1, 2.4};
        const double want = p(std::span<const double>(x));
        CHECK(jack_recursion_lift(lambda, kd, x) == doctest::Approx(want).epsilon(1e-9));
      }
      if (d <= 4) {
        const Partition lambda{d};
        std::vector<double> x{0.7, 2.0};
        const double want = jack_p_two_var<double>(lambda, kd, 0.7, 2.0);
        CHECK(jack_recursion_lift(lambda, kd, x) == doctest::Approx(want).epsilon(1e-9));
      }
    }
  }
  const std::vector<double> x{0.5, 1.0, 1.5};
  CHECK(jack_recursion_lift(Partition{1}, 1.0, x) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("recursion lift input validation") {
  const std::vector<double> bad{1.0, 0.5, 2.0};
  CHECK_THROWS_AS(jack_recursion_lift(Partition{1}, 1.0, bad), DomainError);
  const std::vector<double> four{0.1, 0.2, 0.3, 0.4};
  CHECK_THROWS_AS(jack_recursion_lift(Partition{1}, 1.0, four), DomainError);
  const std::vector<double> three{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(jack_recursion_lift(Partition{1, 1, 1}, 1.0, three), DomainError);
  CHECK_THROWS_AS(jack_recursion_lift(Partition{1}, 0.0, three), DomainError);
}

TEST_CASE("jack to_json") {
  const auto j = to_json(jack_p(Partition{2}, JackParameter(Rational(1)), 2));
  CHECK(j["lambda"] == nlohmann::json::array({2}));
  CHECK(j["k"] == "1");
  CHECK(j["nvars"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["partition"] == nlohmann::json::array({2}));
  CHECK(j["terms"][1]["coeff"] == "1");
}
