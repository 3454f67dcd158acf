#include "fracx/gamma_ratio.hpp"

#include <cmath>

#include "fracx/errors.hpp"

namespace fracx {

namespace {

// If q*s is exactly an integer p for some q = 2^t, t <= 6, with p <= 1024,
// report (q, p); otherwise q = 0.  Doubles are dyadic rationals, so this is
// an exact test on the mantissa.
void dyadic_step(double s, long& q, long& p) {
  q = 0;
  p = 0;
  if (!(s > 0) || !std::isfinite(s)) return;
  int e;
  double f = std::frexp(s, &e);  // s = f * 2^e, f in [0.5, 1)
  long long mant = static_cast<long long>(std::ldexp(f, 53));  // 53-bit int
  int v = 0;
  while ((mant & 1) == 0) {
    mant >>= 1;
    ++v;
  }
  int ee = e - 53 + v;  // s = mant * 2^ee with mant odd
  if (mant > 1024) return;
  if (ee >= 0) {
    if (ee > 10) return;
    q = 1;
    p = mant << ee;
  } else {
    if (-ee > 6) return;
    q = 1L << (-ee);
    p = mant;
  }
  if (p > 1024) q = 0;
}

// dst = a0 + n*s exactly (all inputs are doubles; dst precision must be
// generous enough that the products are exact, which holds for the
// multi-hundred-bit working precisions used here).
void set_affine(BigFloat& dst, double a0, long n, double s) {
  mpfr_set_d(dst.raw(), s, MPFR_RNDN);
  mpfr_mul_si(dst.raw(), dst.raw(), n, MPFR_RNDN);
  mpfr_add_d(dst.raw(), dst.raw(), a0, MPFR_RNDN);
}

}  // namespace

bool GammaRatioStream::has_fast_path(double a0, double b0, double s) {
  if (b0 - a0 == 1.0) return true;
  long q, p;
  dyadic_step(s, q, p);
  return q != 0;
}

GammaRatioStream::GammaRatioStream(double a0, double b0, double s,
                                   mpfr_prec_t prec, Extra extra)
    : a0_(a0),
      b0_(b0),
      s_(s),
      prec_(prec),
      extra_(std::move(extra)),
      unit_gap_(b0 - a0 == 1.0),
      t1_(prec),
      t2_(prec) {
  if (!(a0 > 0) || !(b0 > 0))
    throw DomainError("GammaRatioStream: Gamma arguments must stay positive");
  if (!unit_gap_) {
    dyadic_step(s, q_, p_);
    if (q_ > 0) {
      arg_a_.assign(q_, BigFloat(prec_));
      arg_b_.assign(q_, BigFloat(prec_));
      g_a_.assign(q_, BigFloat(prec_));
      g_b_.assign(q_, BigFloat(prec_));
      for (long j = 0; j < q_; ++j) bootstrap_chain(j);
    }
  }
}

void GammaRatioStream::bootstrap_chain(long j) {
  set_affine(arg_a_[j], a0_, j, s_);
  set_affine(arg_b_[j], b0_, j, s_);
  detail::fast_lngamma(t1_, arg_a_[j]);
  bf_exp(g_a_[j], t1_);
  detail::fast_lngamma(t1_, arg_b_[j]);
  bf_exp(g_b_[j], t1_);
}

void GammaRatioStream::next(BigFloat& out) {
  const long n = n_++;
  if (unit_gap_) {
    set_affine(t1_, a0_, n, s_);
    mpfr_ui_div(out.raw(), 1, t1_.raw(), MPFR_RNDN);
  } else if (q_ > 0) {
    const long j = n % q_;
    mpfr_div(out.raw(), g_a_[j].raw(), g_b_[j].raw(), MPFR_RNDN);
    // advance chain j by the exact integer shift p
    for (long i = 0; i < p_; ++i) {
      mpfr_mul(g_a_[j].raw(), g_a_[j].raw(), arg_a_[j].raw(), MPFR_RNDN);
      mpfr_add_ui(arg_a_[j].raw(), arg_a_[j].raw(), 1, MPFR_RNDN);
      mpfr_mul(g_b_[j].raw(), g_b_[j].raw(), arg_b_[j].raw(), MPFR_RNDN);
      mpfr_add_ui(arg_b_[j].raw(), arg_b_[j].raw(), 1, MPFR_RNDN);
    }
  } else {
    set_affine(t1_, a0_, n, s_);
    detail::fast_lngamma(t2_, t1_);
    set_affine(t1_, b0_, n, s_);
    detail::fast_lngamma(out, t1_);
    mpfr_sub(t2_.raw(), t2_.raw(), out.raw(), MPFR_RNDN);
    bf_exp(out, t2_);
  }
  if (extra_) extra_(n, out);
}

}  // namespace fracx
