#pragma once

#include <utility>

#include "fracx/eval.hpp"
#include "fracx/series.hpp"

namespace fracx {

// Parameter triple of the three-parameter entire function
//   E_{alpha,m,l}(z) = sum_n (prod_{k=1}^n G(1+a((k-1)m+l))/G(1+a((k-1)m+l+1))) z^n
// with G the Gamma function.  Construction validates the domain.
struct KSParams {
  double alpha;
  double m;
  double l;
  KSParams(double alpha_, double m_, double l_);
};

// sum z^n / Gamma(beta + n*alpha), certified.
EvalResult mittag_leffler(double alpha, double beta, double z,
                          const EvalConfig& cfg = {});

// Three-parameter function above, certified.  Reduces to the one-parameter
// Mittag-Leffler function at m=1, l=0.
EvalResult kilbas_saigo(const KSParams& p, double z, const EvalConfig& cfg = {});

// sum z^n / (n!)^alpha, certified.  alpha=0 requires |z| < 1 and returns
// 1/(1-z); alpha=1 is the exponential.
EvalResult le_roy(double alpha, double z, const EvalConfig& cfg = {});

// Reusable evaluators that cache coefficient tables across a grid of
// arguments at fixed parameters.
SeriesEvaluator make_ks_series(const KSParams& p);
SeriesEvaluator make_ml_series(double alpha, double beta);
SeriesEvaluator make_leroy_series(double alpha);

// Raw coefficient objects, for wrapping (index shifts etc.).
std::shared_ptr<const SeriesCoeffs> ks_coeffs(const KSParams& p);
std::shared_ptr<const SeriesCoeffs> ml_coeffs(double alpha, double beta);
std::shared_ptr<const SeriesCoeffs> leroy_coeffs(double alpha);

// Closed-form hyperbolic brackets:
//   weibull_ks          1/(1+G(1-a)x) <= E_{a,m,m-1}(-x)
//                                     <= 1/(1+(G(1+a(m-1))/G(1+am))x)
//   frechet_ks_upper    E_{a,m,m-1/a}(-x)
//                                     <= (1+(G(1+am)/G(1+a(m+1)))x)^{-(1+1/m)}
//                       (no general lower bound; lo is -inf)
//   frechet_ks_lower_m1 (m=1 only)    >= (1+sqrt(G(1-a)/G(1+a)) x)^{-2}
//   ml_two_param        brackets G(b)E_{a,b}(-x); aux is b
//   leroy_sandwich      the two three-parameter evaluations bracketing
//                       L_a(-x); aux is m
enum class BoundFamily {
  weibull_ks,
  frechet_ks_upper,
  frechet_ks_lower_m1,
  ml_two_param,
  leroy_sandwich
};
std::pair<double, double> hyperbolic_bounds(BoundFamily family, double alpha,
                                            double aux, double x);

// Leading behaviour f(-x) ~ constant * x^(-power) * (log x)^(-log_power)
// * exp(-exp_rate * x) as x -> +infinity.
struct AsymptoteSpec {
  double constant = 0;
  double power = 0;
  double log_power = 0;
  double exp_rate = 0;
};

enum class AsymFamily { weibull_ks, frechet_ks, leroy };
AsymptoteSpec leading_asymptote(AsymFamily family, double alpha, double m);

}  // namespace fracx
