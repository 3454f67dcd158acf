#pragma once

#include <functional>
#include <vector>

#include "fracx/dist.hpp"
#include "fracx/eval.hpp"

namespace fracx {

// left_halfaxis:  (1/Gamma(a)) int_0^x (x-u)^{a-1} f(u) du,      x > 0
// right_halfaxis: (1/Gamma(a)) int_x^inf (u-x)^{a-1} f(u) du,    x > 0
// left_line:      (1/Gamma(a)) int_{-inf}^x (x-u)^{a-1} f(u) du, x in R
enum class FracSide { left_halfaxis, right_halfaxis, left_line };

// Analytic continuation of a grid function beyond its unbounded-side edge
// node U (the last abscissa for right_halfaxis, the first for left_line):
//   power:       f(u) = scale * (u/U)^exponent
//   exponential: f(u) = scale * e^{exponent*(u-U)}
// anchored so that f(U) = scale.
enum class TailKind { none, power, exponential };

struct TailSpec {
  TailKind kind = TailKind::none;
  double exponent = 0;
  double scale = 0;
};

struct GridFunction {
  std::vector<double> abscissae;  // strictly increasing
  std::vector<double> values;     // same length
  TailSpec tail{};
};

// Product-integration values of the fractional integral at each x in x_eval.
// The integrand is taken piecewise linear between grid nodes, integrated
// against the exact kernel moments per cell, so the result is exact on
// piecewise-linear f up to tail truncation.  alpha in (0,1]; alpha = 1 is
// the ordinary running integral.  The unbounded sides require f.tail
// (MissingTail otherwise); left_line accepts only an exponential tail.
GridFunction frac_integral(FracSide side, double alpha, const GridFunction& f,
                           const std::vector<double>& x_eval);

// weibull_type: survival equation on (0, inf), hazard vanishing at 0
// frechet_type: distribution equation on (0, inf), hazard vanishing at inf
// gumbel_type:  survival equation on R, hazard vanishing at -inf
enum class HazardKind { weibull_type, frechet_type, gumbel_type };

// Envelope certificate with the literal exponent of the bounding law:
//   weibull_type: h(x) <= c x^exponent near 0,   exponent = rho - alpha
//   frechet_type: h(x) <= c x^exponent near inf, exponent = -rho - alpha
//   gumbel_type:  h(x) <= c e^{exponent*x} near -inf, exponent = lambda
struct HazardEnvelope {
  double c = 0;
  double exponent = 0;
};

struct HazardSpec {
  std::function<double(double)> evaluator;
  HazardEnvelope envelope{};
};

// Certified bound on the n-th operator iterate applied to a [0,1]-bounded
// function, evaluated at x:
//   weibull: (prod_{k<=n} Gamma(1-alpha+k rho)/Gamma(1+k rho)) c^n x^{rho n}
//   frechet: (prod_{k<=n} Gamma(k rho)/Gamma(alpha+k rho)) c^n x^{-rho n}
//   gumbel:  c^n e^{n lambda x} lambda^{-n alpha} (n!)^{-alpha}
// n = 0 gives 1.  Strictly decreasing to 0 in n once below 1.
double remainder_bound(HazardKind kind, double alpha, const HazardEnvelope& env,
                       double x, long n);

// The edge of the region where remainder_bound(..., n) < 1: an upper limit
// in x for weibull_type and gumbel_type, a lower limit for frechet_type.
double certified_radius(HazardKind kind, double alpha,
                        const HazardEnvelope& env, long n);

struct SeriesSolution {
  GridFunction solution;   // survival (weibull/gumbel) or cdf (frechet)
  GridFunction remainder;  // certified bound on the truncation, per point
  double certified_limit = 0;  // certified_radius at n_terms
};

// Partial sum of the alternating operator series sum_n (-1)^n A^n 1 with
// A : f -> frac_integral(h f), truncated after n_terms terms.  The envelope
// is spot-checked at 20 points over the hazard's limit region before any
// work (EnvelopeViolated on failure).  Grid points outside certified_limit
// still receive the partial sum, but their remainder entry is >= 1 and the
// value must not be trusted there.
SeriesSolution series_solve(HazardKind kind, double alpha, const HazardSpec& h,
                            const std::vector<double>& grid, long n_terms);

// Closed form for the exact power hazards lambda x^{rho-alpha} (weibull),
// lambda x^{-rho-alpha} (frechet) and lambda^alpha e^{lambda x} (gumbel,
// rho ignored), delegating to the matching distribution code path.
EvalResult power_hazard_solve(HazardKind kind, double alpha, double lambda,
                              double rho, double x, const EvalConfig& cfg = {});

}  // namespace fracx
