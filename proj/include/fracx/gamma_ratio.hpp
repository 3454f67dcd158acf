#pragma once

#include <functional>
#include <vector>

#include "fracx/series.hpp"

namespace fracx {

// Stream of ratios Gamma(A0 + n s) / Gamma(B0 + n s), optionally times a
// caller-supplied per-step factor.  When q s is exactly an integer p for a
// small power of two q (true for dyadic steps like 0.5, 1, 2.5), the Gamma
// values advance through q interleaved exact integer-shift recurrences
// Gamma(x+p) = Gamma(x) x (x+1) ... (x+p-1), costing O(p/q) multiplications
// per term.  Otherwise each ratio is computed from two Stirling-series
// log-Gamma evaluations.
class GammaRatioStream final : public RatioStream {
 public:
  // Applied in place to the Gamma ratio; n is the step index.
  using Extra = std::function<void(long n, BigFloat& inout)>;

  GammaRatioStream(double a0, double b0, double s, mpfr_prec_t prec,
                   Extra extra = {});
  void next(BigFloat& out) override;

  // True when (a0, b0, s) admits the integer-shift fast path.
  static bool has_fast_path(double a0, double b0, double s);

 private:
  void bootstrap_chain(long j);

  double a0_, b0_, s_;
  mpfr_prec_t prec_;
  Extra extra_;
  long n_ = 0;
  bool unit_gap_;  // b0 - a0 == 1: ratio is 1/(a0 + n s)
  long q_ = 0, p_ = 0;  // chain modulus and integer shift; q_ == 0: slow path
  std::vector<BigFloat> arg_a_, arg_b_, g_a_, g_b_;
  BigFloat t1_, t2_;
};

}  // namespace fracx
