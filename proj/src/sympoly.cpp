#include "jackprod/sympoly.hpp"

#include <algorithm>

#include "jackprod/errors.hpp"

namespace jackprod {

template <class T>
MonomialExpansion<T>::MonomialExpansion(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("MonomialExpansion needs at least one variable");
}

template <class T>
MonomialExpansion<T> MonomialExpansion<T>::monomial(const Partition& mu, int nvars) {
  MonomialExpansion p(nvars);
  p.add(mu, T(1));
  return p;
}

template <class T>
void MonomialExpansion<T>::add(const Partition& mu, const T& c) {
  if (mu.length() > nvars_) {
    throw DomainError("monomial " + mu.to_string() + " needs more than " + std::to_string(nvars_) +
                      " variables");
  }
  if (c == T(0)) return;
  auto [it, inserted] = coeffs_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == T(0)) coeffs_.erase(it);
  }
}

template <class T>
T MonomialExpansion<T>::coeff(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? T(0) : it->second;
}

template <class T>
bool MonomialExpansion<T>::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  const int d = coeffs_.begin()->first.weight();
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [d](const auto& kv) { return kv.first.weight() == d; });
}

template <class T>
int MonomialExpansion<T>::degree() const {
  if (coeffs_.empty()) return -1;
  if (!is_homogeneous()) throw DomainError("degree of a non-homogeneous expansion");
  return coeffs_.begin()->first.weight();
}

template <class T>
MonomialExpansion<T>& MonomialExpansion<T>::operator+=(const MonomialExpansion& other) {
  if (other.nvars_ != nvars_) throw DomainError("adding expansions in different variable counts");
  for (const auto& [mu, c] : other.coeffs_) add(mu, c);
  return *this;
}

template <class T>
MonomialExpansion<T>& MonomialExpansion<T>::operator*=(const T& c) {
  if (c == T(0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= c;
  return *this;
}

namespace {

template <class T>
T ipow(const T& base, int e) {
  T r(1);
  T b(base);
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

/// Distinct rearrangements of lambda padded to n, ascending order.
template <class F>
void for_each_rearrangement(const Partition& lambda, int n, F&& f) {
  std::vector<int> e = lambda.padded(n);
  std::sort(e.begin(), e.end());
  do {
    f(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

using Exponents = std::vector<int>;

}  // namespace

template <class T>
T monomial_eval(const Partition& lambda, std::span<const T> x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) {
    throw DomainError("monomial_eval: " + lambda.to_string() + " needs more than " +
                      std::to_string(n) + " variables");
  }
  T sum(0);
  for_each_rearrangement(lambda, n, [&](const Exponents& e) {
    T term(1);
    for (int i = 0; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)]) term *= ipow(x[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    }
    sum += term;
  });
  return sum;
}

template <class T>
T eval(const MonomialExpansion<T>& p, std::span<const T> x) {
  if (static_cast<int>(x.size()) != p.nvars()) {
    throw DomainError("eval: expected " + std::to_string(p.nvars()) + " coordinates, got " +
                      std::to_string(x.size()));
  }
  T sum(0);
  for (const auto& [mu, c] : p.terms()) sum += c * monomial_eval<T>(mu, x);
  return sum;
}

template <class T>
MonomialExpansion<T> apply_lb_operator(const MonomialExpansion<T>& p, const T& k) {
  if (!p.is_homogeneous()) throw DomainError("apply_lb_operator: input is not homogeneous");
  const int n = p.nvars();
  std::map<Exponents, T> acc;
  auto bump = [&acc](const Exponents& e, const T& c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) it->second += c;
  };
  const T two_k = T(2) * k;

  for (const auto& [mu, c] : p.terms()) {
    for_each_rearrangement(mu, n, [&](const Exponents& e) {
      // sum_i x_i^2 d_i^2 is diagonal on monomials
      T diag(0);
      for (int ei : e) diag += T(ei * (ei - 1));
      if (diag != T(0)) bump(e, c * diag);

      // 2k sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j) on the swap pair
      // {x^e, x^swap(e)}; the pair is taken once, from the member with
      // e_i > e_j, and its antisymmetric numerator telescopes.
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int a = e[static_cast<std::size_t>(i)];
          const int b = e[static_cast<std::size_t>(j)];
          if (a < b) continue;
          Exponents f = e;
          if (a == b) {
            if (a) bump(f, two_k * c * T(a));
            continue;
          }
          const int gap = a - b;
          // a (x_i x_j)^b sum_{r=0}^{gap} x_i^r x_j^{gap-r}
          for (int r = 0; r <= gap; ++r) {
            f[static_cast<std::size_t>(i)] = b + r;
            f[static_cast<std::size_t>(j)] = b + gap - r;
            bump(f, two_k * c * T(a));
          }
          // - b (x_i x_j)^{b+1} sum_{r=0}^{gap-2} x_i^r x_j^{gap-2-r}
          if (b > 0) {
            for (int r = 0; r <= gap - 2; ++r) {
              f[static_cast<std::size_t>(i)] = b + 1 + r;
              f[static_cast<std::size_t>(j)] = b + 1 + gap - 2 - r;
              bump(f, -(two_k * c * T(b)));
            }
          }
        }
      }
    });
  }

  // The result is symmetric; the coefficient of m_nu is read off the
  // weakly decreasing representative.
  MonomialExpansion<T> out(n);
  for (const auto& [e, c] : acc) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<int>())) continue;
    out.add(Partition(e), c);
  }
  return out;
}

template <class T>
MonomialExpansion<T> scale_by_rectangle(const MonomialExpansion<T>& p, int c) {
  if (p.nvars() != 2) throw DomainError("scale_by_rectangle requires two variables");
  if (c < 0) throw DomainError("scale_by_rectangle: negative shift");
  MonomialExpansion<T> out(2);
  for (const auto& [mu, coeff] : p.terms()) out.add(Partition{mu[0] + c, mu[1] + c}, coeff);
  return out;
}

nlohmann::json to_json(const MonomialExpansion<Rational>& p) {
  nlohmann::json terms = nlohmann::json::array();
  // decreasing lexicographic order, leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<int> parts(it->first.parts().begin(), it->first.parts().end());
    terms.push_back({{"partition", parts}, {"coefficient", to_string(it->second)}});
  }
  return terms;
}

template class MonomialExpansion<Rational>;
template class MonomialExpansion<double>;

template Rational monomial_eval<Rational>(const Partition&, std::span<const Rational>);
template double monomial_eval<double>(const Partition&, std::span<const double>);
template Rational eval<Rational>(const MonomialExpansion<Rational>&, std::span<const Rational>);
template double eval<double>(const MonomialExpansion<double>&, std::span<const double>);
template MonomialExpansion<Rational> apply_lb_operator<Rational>(const MonomialExpansion<Rational>&,
                                                                 const Rational&);
template MonomialExpansion<double> apply_lb_operator<double>(const MonomialExpansion<double>&,
                                                             const double&);
template MonomialExpansion<Rational> scale_by_rectangle<Rational>(const MonomialExpansion<Rational>&,
                                                                  int);
template MonomialExpansion<double> scale_by_rectangle<double>(const MonomialExpansion<double>&, int);

}  // namespace jackprod
