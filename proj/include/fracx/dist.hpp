#pragma once

#include <memory>

#include "fracx/barnes.hpp"
#include "fracx/eval.hpp"
#include "fracx/series.hpp"
#include "fracx/specfun.hpp"

namespace fracx {

// The three fractional extreme-value families.  fweibull lives on [0,inf),
// ffrechet on (0,inf), fgumbel on the whole line.  lambda is a pure scale:
// W_{a,l,r} = l^{-1/r} W_{a,1,r}, F_{a,l,r} = l^{1/r} F_{a,1,r},
// G_{a,l} = l^{-1} G_{a,1}.
enum class DistKind { fweibull, ffrechet, fgumbel };

struct DistDescriptor {
  DistKind kind;
  double alpha;   // fractional order in [0,1]
  double lambda;  // scale, > 0
  double rho;     // shape, > 0; unused by fgumbel
};

// Validates parameter domains.  rho is ignored for fgumbel.
DistDescriptor make_dist(DistKind kind, double alpha, double lambda,
                         double rho = 1.0);

EvalResult sf(const DistDescriptor& d, double x, const EvalConfig& cfg = {});
EvalResult cdf(const DistDescriptor& d, double x, const EvalConfig& cfg = {});
EvalResult pdf(const DistDescriptor& d, double x, const EvalConfig& cfg = {});

// x with |cdf(x) - p| <= 1e-9, strictly increasing in p.
double quantile(const DistDescriptor& d, double p, const EvalConfig& cfg = {});

// E[X^s] for fweibull / ffrechet (strips (-rho, rho) and
// (-rho-alpha, rho) respectively), E[e^{sX}] for fgumbel (|s| < lambda).
// ctx supplies the quadrature tolerance; the modulus is taken from d.
double mellin(const DistDescriptor& d, double s, const PochhammerContext& ctx);

enum class SupportEnd { lower, upper };

// Leading density behaviour at a support edge, for alpha in (0,1):
//   density ~ constant * x^power * exp(-exp_rate * |x|)
// with x the distance into the edge (x -> 0+ at a finite lower end,
// x -> +inf at an infinite end; the fgumbel lower end is x -> -inf with
// |x| in the formula).  power is the literal exponent here, unlike the
// x^{-power} convention of leading_asymptote.
AsymptoteSpec support_asymptote(const DistDescriptor& d, SupportEnd end);

// Caches series coefficient tables across evaluations at fixed parameters;
// sf/cdf/pdf/quantile free functions above are one-shot conveniences.
class DistEngine {
 public:
  explicit DistEngine(const DistDescriptor& d);

  const DistDescriptor& descriptor() const { return d_; }
  EvalResult sf(double x, const EvalConfig& cfg = {}) const;
  EvalResult cdf(double x, const EvalConfig& cfg = {}) const;
  EvalResult pdf(double x, const EvalConfig& cfg = {}) const;
  double quantile(double p, const EvalConfig& cfg = {}) const;

 private:
  // primary series value at x (sf for fweibull/fgumbel, cdf for ffrechet)
  EvalResult primary(double x, const EvalConfig& cfg) const;
  // shifted-by-one series used for the complement, free of 1-(1-eps)
  // cancellation; built lazily
  EvalResult shifted_eval(double z, const EvalConfig& cfg) const;
  double series_arg(double x) const;

  DistDescriptor d_;
  std::unique_ptr<SeriesEvaluator> primary_, density_;
  mutable std::unique_ptr<SeriesEvaluator> shifted_;
};

}  // namespace fracx
