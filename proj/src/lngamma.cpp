#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <vector>

#include "fracx/bigfloat.hpp"

namespace fracx {
namespace detail {

namespace {

// Cached Stirling-series factors f_k = B_{2k} / (2k (2k-1)), computed from
// even zeta values.  Guarded for concurrent use; grows monotonically in both
// count and precision.
struct StirlingCache {
  std::mutex mu;
  std::vector<BigFloat> f;
  mpfr_prec_t prec = 0;
};
StirlingCache& cache() {
  static StirlingCache c;
  return c;
}

void ensure_factors(size_t count, mpfr_prec_t prec) {
  StirlingCache& c = cache();
  if (c.prec >= prec && c.f.size() >= count) return;
  mpfr_prec_t p = std::max<mpfr_prec_t>(prec, c.prec) + 64;
  size_t n = std::max(count, c.f.size()) + 16;
  c.f.clear();
  c.f.reserve(n);
  // g_k = (2k-2)! / (2 pi)^{2k}, stepped by g_{k+1} = g_k (2k-1)(2k)/(2 pi)^2.
  BigFloat twopi2(p), g(p), z(p), fk(p);
  mpfr_const_pi(twopi2.raw(), MPFR_RNDN);
  mpfr_mul_2ui(twopi2.raw(), twopi2.raw(), 1, MPFR_RNDN);
  mpfr_sqr(twopi2.raw(), twopi2.raw(), MPFR_RNDN);
  mpfr_ui_div(g.raw(), 1, twopi2.raw(), MPFR_RNDN);  // g_1 = 0!/(2pi)^2
  for (size_t k = 1; k <= n; ++k) {
    mpfr_zeta_ui(z.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_mul(fk.raw(), g.raw(), z.raw(), MPFR_RNDN);
    mpfr_mul_2ui(fk.raw(), fk.raw(), 1, MPFR_RNDN);  // f_k = +-2 g_k zeta(2k)
    if (k % 2 == 0) mpfr_neg(fk.raw(), fk.raw(), MPFR_RNDN);
    c.f.push_back(fk);
    mpfr_mul_ui(g.raw(), g.raw(), static_cast<unsigned long>(2 * k - 1),
                MPFR_RNDN);
    mpfr_mul_ui(g.raw(), g.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    mpfr_div(g.raw(), g.raw(), twopi2.raw(), MPFR_RNDN);
  }
  c.prec = p;
}

}  // namespace

// log Gamma(x) for x > 0 at dst's precision, via the Stirling series with
// argument shift into the asymptotic region.  Several times faster than
// mpfr_lngamma at the multi-thousand-bit precisions the certified series
// pass works at.
void fast_lngamma(BigFloat& dst, const BigFloat& x) {
  const mpfr_prec_t P = dst.prec();
  const double xd = mpfr_get_d(x.raw(), MPFR_RNDN);
  const double x0 = 0.35 * static_cast<double>(P) + 8.0;

  // Series length: stop once f_k x^{1-2k} drops below 2^-(P+16).
  const double xs = std::max(xd, x0);
  size_t K = 8;
  {
    double l2x = std::log2(xs);
    double target = -(static_cast<double>(P) + 16.0);
    for (size_t k = 8;; ++k) {
      // log2 |f_k| ~ log2(2 (2k-2)!) - 2k log2(2 pi)
      double lf = (std::lgamma(2.0 * k - 1.0) / 0.6931471805599453) + 1.0 -
                  2.0 * k * 2.6514961294723187;
      if (lf + (1.0 - 2.0 * k) * l2x < target) {
        K = k;
        break;
      }
    }
  }

  // Held through the Horner loop: rebuilds reallocate the factor table.
  StirlingCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  ensure_factors(K, P);

  BigFloat xs_big(P), shift_log(P);
  long N = 0;
  if (xd < x0) {
    N = static_cast<long>(std::ceil(x0 - xd));
    // prod = x (x+1) ... (x+N-1)
    BigFloat prod(P), t(P);
    mpfr_set(prod.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(t.raw(), x.raw(), MPFR_RNDN);
    for (long i = 1; i < N; ++i) {
      mpfr_add_ui(t.raw(), t.raw(), 1, MPFR_RNDN);
      mpfr_mul(prod.raw(), prod.raw(), t.raw(), MPFR_RNDN);
    }
    mpfr_log(shift_log.raw(), prod.raw(), MPFR_RNDN);
    mpfr_add_ui(xs_big.raw(), x.raw(), static_cast<unsigned long>(N),
                MPFR_RNDN);
  } else {
    mpfr_set_zero(shift_log.raw(), 1);
    mpfr_set(xs_big.raw(), x.raw(), MPFR_RNDN);
  }

  // Stirling: (x-1/2) log x - x + log(2 pi)/2 + (1/x) Horner_u(f), u = 1/x^2.
  BigFloat lnx(P), inv(P), u(P), s(P), acc(P);
  mpfr_log(lnx.raw(), xs_big.raw(), MPFR_RNDN);
  mpfr_ui_div(inv.raw(), 1, xs_big.raw(), MPFR_RNDN);
  mpfr_sqr(u.raw(), inv.raw(), MPFR_RNDN);
  mpfr_set_zero(s.raw(), 1);
  for (size_t k = K; k-- > 0;) {
    mpfr_mul(s.raw(), s.raw(), u.raw(), MPFR_RNDN);
    mpfr_add(s.raw(), s.raw(), c.f[k].raw(), MPFR_RNDN);
  }
  mpfr_mul(s.raw(), s.raw(), inv.raw(), MPFR_RNDN);

  mpfr_set(acc.raw(), xs_big.raw(), MPFR_RNDN);
  mpfr_sub_d(acc.raw(), acc.raw(), 0.5, MPFR_RNDN);
  mpfr_mul(acc.raw(), acc.raw(), lnx.raw(), MPFR_RNDN);
  mpfr_sub(acc.raw(), acc.raw(), xs_big.raw(), MPFR_RNDN);
  mpfr_add(acc.raw(), acc.raw(), s.raw(), MPFR_RNDN);
  // + log(2 pi)/2
  BigFloat half_l2pi(P);
  mpfr_const_pi(half_l2pi.raw(), MPFR_RNDN);
  mpfr_mul_2ui(half_l2pi.raw(), half_l2pi.raw(), 1, MPFR_RNDN);
  mpfr_log(half_l2pi.raw(), half_l2pi.raw(), MPFR_RNDN);
  mpfr_div_2ui(half_l2pi.raw(), half_l2pi.raw(), 1, MPFR_RNDN);
  mpfr_add(acc.raw(), acc.raw(), half_l2pi.raw(), MPFR_RNDN);
  mpfr_sub(dst.raw(), acc.raw(), shift_log.raw(), MPFR_RNDN);
}

}  // namespace detail
}  // namespace fracx
