#pragma once

#include <memory>
#include <vector>

#include "fracx/bigfloat.hpp"
#include "fracx/eval.hpp"

namespace fracx {

// Sequential producer of the linear coefficient ratios c_{n+1}/c_n for
// n = 0, 1, 2, ...  Streams may carry state (e.g. running Gamma recurrences)
// tied to a fixed working precision.
class RatioStream {
 public:
  virtual ~RatioStream() = default;
  virtual void next(BigFloat& out) = 0;
};

// Coefficients of an entire-function power series sum_{n>=0} c_n z^n with
// c_n > 0: the log of c_0, cheap double-precision log-ratios for the
// prescan, and a precision-bound ratio stream for the certified pass.
class SeriesCoeffs {
 public:
  virtual ~SeriesCoeffs() = default;
  virtual double log_c0() const { return 0.0; }
  virtual void log_c0_big(BigFloat& out) const { bf_set_d(out, 0.0); }
  // log(c_{n+1}/c_n)
  virtual double log_ratio(long n) const = 0;
  virtual std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const = 0;
};

// Certified summation of sum c_n z^n.
//
// A double-precision log-space prescan locates the peak term magnitude; the
// certified pass then runs at peak_bits + 53 + 32 guard bits of precision,
// stopping once 3 consecutive terms fall below target_rel_error/10 of the
// partial sum with decreasing magnitudes.  The reported bound is twice the
// first omitted term plus an accumulated-rounding envelope; if the bound
// misses the target the precision is doubled and the pass repeated, up to
// max_precision_bits.
//
// Coefficients are cached across calls (they do not depend on z), so grids
// of evaluations at fixed parameters pay the coefficient cost once.
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(std::shared_ptr<const SeriesCoeffs> coeffs);

  // Throws NonConvergent when budgets are exhausted.
  EvalResult eval(double z, const EvalConfig& cfg) const;

 private:
  void ensure_coeffs(long n, mpfr_prec_t prec) const;

  std::shared_ptr<const SeriesCoeffs> coeffs_;
  mutable std::vector<BigFloat> cache_;
  mutable std::unique_ptr<RatioStream> stream_;
  mutable mpfr_prec_t cache_prec_ = 0;
};

}  // namespace fracx
