#pragma once

#include <string_view>

#include "jackprod/rational.hpp"
#include "jackprod/report.hpp"

namespace jackprod {

/// Multiplicity (kappa1, kappa2) of the B2 root system: kappa1 on the short
/// roots +-e_i, kappa2 on the long roots +-e_1 +- e_2.
class Multiplicity {
 public:
  Multiplicity(Rational kappa1, Rational kappa2);
  /// "1,1", "0.8,1.3", "1/2,3/2"
  static Multiplicity parse(std::string_view text);

  const Rational& kappa1() const { return kappa1_; }
  const Rational& kappa2() const { return kappa2_; }
  double k1() const { return to_double(kappa1_); }
  double k2() const { return to_double(kappa2_); }

  /// mu = kappa1 + kappa2 + 1/2, the 0F1 parameter for n = 2.
  double order_mu() const { return k1() + k2() + 0.5; }

  /// kappa' = (kappa2, kappa1)
  Multiplicity swapped() const { return Multiplicity(kappa2_, kappa1_); }

 private:
  Rational kappa1_;
  Rational kappa2_;
};

/// Gamma(nu+1) sum_m (t/2)^(2m) / (m! Gamma(m+nu+1)); equals 1 at t = 0.
double bessel_i_norm(double nu, double t);

struct SeriesValue {
  double value;
  /// |contribution of the highest included degree|
  double truncation;
};

/// sum_{|lambda| <= max_degree, l(lambda) <= 2}
///   P(x) P(y) / ([mu]_lambda h_k(lambda) P(1,1))
SeriesValue hyp0f1_two(double mu, double k, Pair x, Pair y, int max_degree);

/// J^kappa_{B2}(x, y) = 0F1(mu, x^2/2, y^2/2) with k = kappa2.
SeriesValue bessel_b2_series(const Multiplicity& kappa, Pair x, Pair y, int max_degree);

/// 0F1(mu, x, (1,0)) as c_k int I_{mu-1}(sqrt(2(x1+x2+v(x1-x2)))) (1-v^2)^(k-1) dv.
double hyp0f1_lemma4(double mu, double k, Pair x, int npoints);

enum class Theorem3Order { kMu, kMuMinusOne };

double theorem3_order_value(const Multiplicity& kappa, Theorem3Order order);
std::string_view to_string(Theorem3Order order);

/// c_kappa double integral of I_order(sqrt(Z/2)) against
/// (1-u^2)^(kappa2-1) (1-v^2)^(kappa1-1), where
/// Z = (x1^2+x2^2)(y1^2+y2^2) + u(x1^2-x2^2)(y1^2-y2^2) + 4v x1 x2 y1 y2.
double bessel_b2_theorem3(const Multiplicity& kappa, Pair x, Pair y, int npoints_u, int npoints_v,
                          double order, bool parallel = true);
double bessel_b2_theorem3(const Multiplicity& kappa, Pair x, Pair y, int npoints_u, int npoints_v,
                          Theorem3Order order, bool parallel = true);

struct OrderResolution {
  Theorem3Order selected;
  double order;
  double max_err_mu;            // worst relative error of candidate mu
  double max_err_mu_minus_one;  // worst relative error of candidate mu-1
};

/// Picks the Bessel order of the double-integral representation by
/// comparing both candidates with the series at five seeded points.
/// Throws ResolutionFailure when neither agrees within 1e-5.
OrderResolution resolve_theorem3_order(const Multiplicity& kappa);

/// J^kappa(x, y) against J^kappa'(r x, r y), r = [[1,1],[-1,1]]/sqrt(2).
VerificationReport bessel_rotation_symmetry(const Multiplicity& kappa, Pair x, Pair y, int max_degree,
                                            double tol = 1e-8);

/// I(x) I(y) = c_k int I(sqrt(x^2+y^2+2uxy)) (1-u^2)^(k-1) du, I of order k-1/2.
VerificationReport bessel_product_identity(double k, double x, double y, int npoints, double tol = 1e-10);

/// P_(2l,l)(1+x/l, 1-x/l) / P_(2l,l)(1,1); tends to I_{k-1/2}(x).
double limit_transition(double k, double x, int ell);

}  // namespace jackprod
