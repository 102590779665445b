#include "jackprod/jack.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "jackprod/kernels.hpp"
#include "jackprod/quadrature.hpp"

namespace jackprod {

double JackPolynomial::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nvars) throw DomainError("JackPolynomial: wrong number of coordinates");
  double sum = 0.0;
  for (const auto& [mu, c] : expansion.terms()) sum += to_double(c) * monomial_eval<double>(mu, x);
  return sum;
}

JackPolynomial jack_p_uncached(const Partition& lambda, const JackParameter& k, int n) {
  if (lambda.length() > n) {
    throw DomainError("jack_p: " + lambda.to_string() + " has more than n=" + std::to_string(n) + " parts");
  }
  const Rational& kk = k.value();
  std::vector<Partition> basis;
  for (auto& mu : partitions_of_weight(lambda.weight(), n)) {
    if (dominance_leq(mu, lambda)) basis.push_back(std::move(mu));
  }
  // basis[0] == lambda; decreasing lex order extends dominance, so every
  // nu > mu precedes mu.
  std::vector<MonomialExpansion<Rational>> images;
  images.reserve(basis.size());
  for (const auto& nu : basis) {
    images.push_back(apply_lb_operator(MonomialExpansion<Rational>::monomial(nu, n), kk));
  }

  const Rational e_lambda = eigenvalue_e(lambda, kk, n);
  std::vector<Rational> a(basis.size(), Rational(0));
  a[0] = 1;
  MonomialExpansion<Rational> expansion(n);
  expansion.add(lambda, Rational(1));
  for (std::size_t i = 1; i < basis.size(); ++i) {
    Rational rhs = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] != 0) rhs += a[j] * images[j].coeff(basis[i]);
    }
    if (rhs == 0) continue;
    const Rational gap = e_lambda - eigenvalue_e(basis[i], kk, n);
    if (gap == 0) {
      throw DegenerateEigenvalue("jack_p: e" + lambda.to_string() + " == e" + basis[i].to_string() +
                                 " at k=" + kk.get_str());
    }
    a[i] = rhs / gap;
    expansion.add(basis[i], a[i]);
  }
  return JackPolynomial{lambda, kk, n, std::move(expansion)};
}

namespace {

using CacheKey = std::tuple<Partition, std::string, int>;

struct JackCache {
  std::shared_mutex mutex;
  std::map<CacheKey, JackPolynomial> entries;
};

JackCache& cache() {
  static JackCache instance;
  return instance;
}

}  // namespace

JackPolynomial jack_p(const Partition& lambda, const JackParameter& k, int n) {
  CacheKey key{lambda, k.value().get_str(), n};
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  JackPolynomial p = jack_p_uncached(lambda, k, n);
  std::unique_lock lock(c.mutex);
  c.entries.try_emplace(std::move(key), p);
  return p;
}

void clear_jack_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.entries.clear();
}

Rational jack_p_at_ones(const Partition& lambda, const JackParameter& k, int n) {
  const JackPolynomial p = jack_p(lambda, k, n);
  const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
  return p(ones);
}

Rational jack_c_factor(const Partition& lambda, const JackParameter& k) {
  Rational factorial = 1;
  for (int i = 2; i <= lambda.weight(); ++i) factorial *= i;
  return factorial / hook_product_h(lambda, k.value());
}

Rational jack_c(const Partition& lambda, const JackParameter& k, int n, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != n) throw DomainError("jack_c: expected " + std::to_string(n) + " coordinates");
  if (lambda.length() > n) throw DomainError("jack_c: partition longer than n");
  return jack_c_factor(lambda, k) * jack_p(lambda, k, n)(x);
}

MonomialExpansion<Rational> jack_c_expansion(const Partition& lambda, const JackParameter& k, int n) {
  MonomialExpansion<Rational> p = jack_p(lambda, k, n).expansion;
  p *= jack_c_factor(lambda, k);
  return p;
}

double jack_recursion_lift(const Partition& lambda, double k, std::span<const double> x,
                           const LiftOptions& options) {
  const int n = static_cast<int>(x.size());
  if (n < 2 || n > 3) throw DomainError("jack_recursion_lift: only n = 2 or 3 is supported");
  if (!(k > 0)) throw DomainError("jack_recursion_lift: k must be positive");
  if (lambda.length() > n - 1) throw DomainError("jack_recursion_lift: partition needs at most n-1 parts");
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] < 0) throw DomainError("jack_recursion_lift: negative coordinate");
    if (i > 0 && !(x[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i - 1)])) {
      throw DomainError("jack_recursion_lift: coordinates must be strictly increasing");
    }
  }

  double log_prefactor = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    const double li = lambda[static_cast<std::size_t>(i - 1)];
    log_prefactor += std::lgamma(li + (n - i + 1) * k) - std::lgamma(li + (n - i) * k) - std::lgamma(k);
  }
  double log_vandermonde = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) log_vandermonde += std::log(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)]);
  }

  const QuadratureRule rule = gauss_jacobi_rule(options.npoints, k);
  const auto u = rule.nodes();
  const auto w = rule.weights();

  // nu_j = mid_j + half_j u on [x_j, x_{j+1}]: the endpoint factors become
  // half_j^(2k-2) (1-u^2)^(k-1) and dnu_j = half_j du.
  const int dims = n - 1;
  std::vector<double> mid(static_cast<std::size_t>(dims)), half(static_cast<std::size_t>(dims));
  double log_jacobian = 0.0;
  for (int j = 0; j < dims; ++j) {
    mid[static_cast<std::size_t>(j)] = 0.5 * (x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(j + 1)]);
    half[static_cast<std::size_t>(j)] = 0.5 * (x[static_cast<std::size_t>(j + 1)] - x[static_cast<std::size_t>(j)]);
    log_jacobian += (2.0 * k - 1.0) * std::log(half[static_cast<std::size_t>(j)]);
  }
  const double scale = std::exp(log_prefactor + (1.0 - 2.0 * k) * log_vandermonde + log_jacobian);

  if (n == 2) {
    // P_(m)(nu) = nu^m in one variable
    const int m = lambda[0];
    const double value = integrate(rule, [&](double t) {
      const double nu = mid[0] + half[0] * t;
      return std::pow(nu, m);
    });
    return scale * value;
  }

  // n = 3: smooth remaining factors |x_3 - nu_1|^(k-1) |x_1 - nu_2|^(k-1)
  // times P(nu_1, nu_2) (nu_2 - nu_1).
  const double kk = k;
  auto term = [&](std::size_t i, std::size_t j) {
    const double nu1 = mid[0] + half[0] * u[i];
    const double nu2 = mid[1] + half[1] * u[j];
    const double smooth = std::pow(x[2] - nu1, kk - 1.0) * std::pow(nu2 - x[0], kk - 1.0);
    return jack_p_two_var<double>(lambda, kk, nu2, nu1) * (nu2 - nu1) * smooth;
  };
  const double value = options.parallel ? kernels::parallel::tensor_quadrature(w, w, term)
                                        : kernels::serial::tensor_quadrature(w, w, term);
  return scale * value;
}

nlohmann::json to_json(const JackPolynomial& p) {
  std::vector<int> parts(p.lambda.parts().begin(), p.lambda.parts().end());
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.expansion.terms().rbegin(); it != p.expansion.terms().rend(); ++it) {
    std::vector<int> mu(it->first.parts().begin(), it->first.parts().end());
    terms.push_back({{"partition", mu}, {"coeff", to_string(it->second)}});
  }
  return {{"lambda", parts}, {"k", to_string(p.k)}, {"nvars", p.nvars}, {"terms", terms}};
}

}  // namespace jackprod
