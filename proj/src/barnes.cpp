#include "fracx/barnes.hpp"

#include <algorithm>
#include <cmath>

#include "fracx/errors.hpp"
#include "fracx/quadrature.hpp"
#include "fracx/specfun.hpp"

namespace fracx {

namespace {

// Integrand bracket of the log G representation (not yet divided by x).
// The first two terms both blow up like z/(dx) as x -> 0; they are combined
// over the common denominator so the difference is formed from O(x^2)-size
// quantities, and the arithmetic runs in long double: the residual rounding
// noise scales like eps*z/(d x^2) and would otherwise stall the adaptive
// quadrature near the left endpoint.
double malmsten_bracket(double xd, double z, double delta) {
  const long double x = xd;
  const long double ex = -expm1l(-x);           // 1 - e^{-x}
  const long double edx = -expm1l(-delta * x);  // 1 - e^{-dx}
  const long double ezx = -expm1l(-z * x);      // 1 - e^{-zx}
  const long double e_dx = expl(-delta * x);
  // (1-e^{-zx}) - z e^{-dx}(1-e^{-x})
  const long double num = ezx - static_cast<long double>(z) * e_dx * ex;
  long double b = num / (ex * edx) +
                  (static_cast<long double>(z) - 1.0L) *
                      (static_cast<long double>(z) / (2.0L * delta) - 1.0L) *
                      e_dx -
                  1.0L;
  return static_cast<double>(b);
}

double malmsten_bracket_over_x(double x, double z, double delta) {
  return malmsten_bracket(x, z, delta) / x;
}

// Taylor expansion of the bracket/x about x = 0 through x^5 (the x^6
// coefficient vanishes identically, so truncation error is O(x^7)).
void malmsten_taylor(double z, double d, double c[6]) {
  const double z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z, z6 = z5 * z,
               z7 = z6 * z;
  const double d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d, d6 = d5 * d,
               d7 = d6 * d;
  const double zm1 = z - 1.0;
  c[0] = zm1 * (12 * d2 - 9 * d * z + 2 * z2 - z) / (12 * d);
  c[1] = -zm1 * (12 * d3 - 5 * d2 * z - 2 * d * z2 + d * z + z3 - z2) /
         (24 * d);
  c[2] = zm1 *
         (120 * d4 - 60 * d3 * z + 10 * d2 * z2 - 5 * d2 * z - 15 * d * z3 +
          15 * d * z2 + 6 * z4 - 9 * z3 + z2 + z) /
         (720 * d);
  c[3] = -zm1 *
         (60 * d5 - 31 * d4 * z + 5 * d2 * z3 - 5 * d2 * z2 - 6 * d * z4 +
          9 * d * z3 - d * z2 - d * z + 2 * z5 - 4 * z4 + z3 + z2) /
         (1440 * d);
  c[4] = zm1 *
         (504 * d6 - 252 * d5 * z - 14 * d4 * z2 + 7 * d4 * z + 42 * d2 * z4 -
          63 * d2 * z3 + 7 * d2 * z2 + 7 * d2 * z - 42 * d * z5 + 84 * d * z4 -
          21 * d * z3 - 21 * d * z2 + 12 * z6 - 30 * z5 + 12 * z4 + 12 * z3 -
          2 * z2 - 2 * z) /
         (60480 * d);
  c[5] = -zm1 *
         (168 * d7 - 82 * d6 * z - 7 * d4 * z3 + 7 * d4 * z2 + 14 * d2 * z5 -
          28 * d2 * z4 + 7 * d2 * z3 + 7 * d2 * z2 - 12 * d * z6 +
          30 * d * z5 - 12 * d * z4 - 12 * d * z3 + 2 * d * z2 + 2 * d * z +
          3 * z7 - 9 * z6 + 5 * z5 + 5 * z4 - 2 * z3 - 2 * z2) /
         (120960 * d);
}

}  // namespace

double log_double_gamma(double z, const PochhammerContext& ctx) {
  if (!(z > 0)) throw DomainError("log_double_gamma: z must be positive");
  if (!(ctx.delta > 0)) throw DomainError("log_double_gamma: delta must be positive");
  const double d = ctx.delta;

  const double cut = 1e-3 * std::min({1.0, 1.0 / d, 1.0 / z});
  double c[6];
  malmsten_taylor(z, d, c);
  double head = 0;
  double p = cut;
  for (int k = 0; k < 6; ++k) {
    head += c[k] * p / (k + 1);
    p *= cut;
  }

  const double decay = std::min({1.0, d, z});
  const double amp = std::max(1.0, std::abs((z - 1.0) * (z / (2 * d) - 1.0)));
  const double x_max = std::log(1e18 * amp) / decay + 10.0;
  // quad_tol is relative to the size of the answer; for large z the integrand
  // amplitude grows like z^2/d and the rounding noise with it
  const double tol = ctx.quad_tol * amp / 3.0;

  auto f = [z, d](double x) { return malmsten_bracket_over_x(x, z, d); };
  // [cut, 1] in log space: int f dx = int bracket(e^u) du, which shrinks
  // the measure of the noise-limited left-endpoint region
  auto g = [z, d](double u) { return malmsten_bracket(std::exp(u), z, d); };
  double tail = integrate(g, std::log(cut), 0.0, tol);
  double a = 1.0;
  for (double b : {10.0, x_max}) {
    if (b <= a) continue;
    tail += integrate(f, a, b, tol);
    a = b;
  }
  return head + tail;
}

double log_pochhammer(double a, double s, const PochhammerContext& ctx) {
  if (!(a > 0)) throw DomainError("log_pochhammer: a must be positive");
  if (!(s > -a)) throw DomainError("log_pochhammer: s must exceed -a");
  return log_double_gamma(a + s, ctx) - log_double_gamma(a, ctx);
}

MellinKernelParams mellin_T(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 0))
    throw DomainError("mellin_T: a, b, c must be positive");
  MellinKernelParams p;
  p.variant = MellinVariant::T_abc;
  p.a = a;
  p.b = b;
  p.c = c;
  return p;
}

MellinKernelParams mellin_Y(const KSParams& ks) {
  MellinKernelParams p;
  p.variant = MellinVariant::Y_ksl;
  p.alpha = ks.alpha;
  p.m = ks.m;
  p.l = ks.l;
  return p;
}

MellinKernelParams mellin_Z(double a, double c, double b, double d,
                            double delta) {
  if (!(a > 0 && b > 0 && c > 0 && d > 0 && delta > 0))
    throw DomainError("mellin_Z: all parameters must be positive");
  MellinKernelParams p;
  p.variant = MellinVariant::Z_four;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.delta = delta;
  return p;
}

double mellin_kernel(const MellinKernelParams& p, double s,
                     const PochhammerContext& ctx) {
  if (s == 0.0) return 1.0;
  switch (p.variant) {
    case MellinVariant::T_abc: {
      if (!(s > -p.a))
        throw DomainError("mellin_kernel: s outside T(a,b,c) strip");
      PochhammerContext c2{p.b, ctx.quad_tol};
      double lg = s * (std::lgamma(p.a / p.b) - std::lgamma((p.a + p.c) / p.b)) +
                  log_pochhammer(p.a + p.c, s, c2) - log_pochhammer(p.a, s, c2);
      return std::exp(lg);
    }
    case MellinVariant::Y_ksl: {
      if (!(s > -1.0))
        throw DomainError("mellin_kernel: s outside Y strip (s > -1)");
      const double delta = 1.0 / (p.alpha * p.m);
      const double a0 = (p.alpha * p.l + 1.0) * delta;
      PochhammerContext c2{delta, ctx.quad_tol};
      double lg = std::lgamma(1.0 + s) + log_pochhammer(a0, s, c2) -
                  log_pochhammer(1.0 / p.m + a0, s, c2);
      return std::exp(lg);
    }
    case MellinVariant::Z_four: {
      if (p.b + p.d > p.a + p.c ||
          std::min(p.b, p.d) > std::min(p.a, p.c))
        throw NotARandomVariable(
            "mellin_kernel: Z[a,c;b,d;delta] does not define a law");
      if (!(s > -std::min(p.b, p.d)))
        throw DomainError("mellin_kernel: s outside Z strip");
      PochhammerContext c2{p.delta, ctx.quad_tol};
      double lg = log_pochhammer(p.a, s, c2) + log_pochhammer(p.c, s, c2) -
                  log_pochhammer(p.b, s, c2) - log_pochhammer(p.d, s, c2);
      return std::exp(lg);
    }
  }
  throw DomainError("mellin_kernel: unknown variant");
}

}  // namespace fracx
