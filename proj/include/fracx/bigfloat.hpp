#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace fracx {

// Thin RAII wrapper around an mpfr_t.  All arithmetic rounds to nearest at
// the precision of the destination operand.  Copy and assignment preserve
// the source precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  void set_prec(mpfr_prec_t p) { mpfr_set_prec(v_, p); mpfr_set_zero(v_, 1); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat& operator=(double x) { mpfr_set_d(v_, x, MPFR_RNDN); return *this; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

  // log2 of |value|, as a double; -inf for zero.
  double log2_abs() const {
    if (is_zero()) return -1e308;
    long exp;
    double m = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
    return static_cast<double>(exp) + std::log2(std::abs(m));
  }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

// Free helpers writing into a preallocated destination (keeps allocation out
// of inner loops).
inline void bf_lngamma(BigFloat& dst, const BigFloat& x) {
  mpfr_lngamma(dst.raw(), x.raw(), MPFR_RNDN);
}
inline void bf_exp(BigFloat& dst, const BigFloat& x) {
  mpfr_exp(dst.raw(), x.raw(), MPFR_RNDN);
}
inline void bf_set_d(BigFloat& dst, double x) { mpfr_set_d(dst.raw(), x, MPFR_RNDN); }

namespace detail {
// Stirling-series log Gamma for x > 0, much faster than mpfr_lngamma at
// multi-thousand-bit precision.  Absolute error ~2^-(prec-16) on the log.
void fast_lngamma(BigFloat& dst, const BigFloat& x);
}  // namespace detail

}  // namespace fracx
