#pragma once

namespace fracx {

struct KSParams;

// State for double-Gamma evaluations: the modulus delta and the quadrature
// tolerance used by the integral representation.
struct PochhammerContext {
  double delta;
  double quad_tol = 1e-12;
};

// log G(z; delta) for real z > 0, where G solves
// G(z+1;delta) = Gamma(z/delta) G(z;delta) with G(1;delta) = 1.
// Computed by adaptive quadrature of the integral representation
//   log G = int_0^inf [ (1-e^{-zx}) / ((1-e^{-x})(1-e^{-dx}))
//                       - z e^{-dx}/(1-e^{-dx})
//                       + (z-1)(z/(2d)-1) e^{-dx} - 1 ] dx/x.
double log_double_gamma(double z, const PochhammerContext& ctx);

// log [a;delta]_s = log G(a+s;delta) - log G(a;delta); requires s > -a.
double log_pochhammer(double a, double s, const PochhammerContext& ctx);

// Mellin transforms E[X^s] of the three positive laws expressible through
// the generalized Pochhammer symbol:
//   T_abc   E[T(a,b,c)^s] = (Gamma(a/b)/Gamma((a+c)/b))^s [a+c;b]_s/[a;b]_s
//   Y_ksl   E[Y^s] = Gamma(1+s) [(al+1)d;d]_s / [1/m+(al+1)d;d]_s,
//           d = 1/(am)
//   Z_four  E[Z^s] = [a;d]_s [c;d]_s / ([b;d]_s [d4;d]_s), defined iff
//           b+d4 <= a+c and min(b,d4) <= min(a,c)
enum class MellinVariant { T_abc, Y_ksl, Z_four };

struct MellinKernelParams {
  MellinVariant variant;
  double a = 0, b = 0, c = 0, d = 0;  // d unused by T_abc
  double delta = 0;                   // Z_four modulus
  double alpha = 0, m = 0, l = 0;     // Y_ksl parameters
};

MellinKernelParams mellin_T(double a, double b, double c);
MellinKernelParams mellin_Y(const KSParams& p);
// Z[a,c; b,d; delta]: numerator symbols a and c, denominator b and d.
MellinKernelParams mellin_Z(double a, double c, double b, double d,
                            double delta);

double mellin_kernel(const MellinKernelParams& p, double s,
                     const PochhammerContext& ctx);

}  // namespace fracx
