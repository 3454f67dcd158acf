#pragma once

#include <string>
#include <vector>

#include "fracx/dist.hpp"
#include "fracx/rng.hpp"

namespace fracx {

// Discretization of the stable subordinator path integrals.
struct PathConfig {
  double step = 1e-4;      // Riemann step (time units)
  int max_recursion = 30;  // tail-recursion depth cap
  double tail_eps = 1e-10; // drop the tail once its mean falls below this
};

// Truncation of the infinite Beta product T(a,b,c).  Every factor has unit
// mean, so means stay exactly unbiased at any truncation; higher moments
// carry an O(1/(N b)) defect.
struct ProductConfig {
  long n_factors = 20000;
  // The Gumbel-side functional has no finite product representation; it is
  // sampled as T(1+alpha/q, 1/q, (1-alpha)/q), which converges to it in law
  // as q -> inf.  Moment bias is O(1/q) and can be checked analytically at
  // any q; the truncation defect grows like q/n_factors, so raising q only
  // helps while n_factors stays well above it.
  double gumbel_q = 64.0;
};

enum class SampleMethod { beta_product, path };
enum class FunctionalKind { weibull_int, frechet_int, exp_int };

struct SampleBatch {
  std::vector<double> values;
  SampleMethod method = SampleMethod::beta_product;
  RngState rng{};
  PathConfig path{};
  ProductConfig product{};
  long flagged = 0;       // draws that hit the recursion cap (compensated)
  double bias_bound = 0;  // largest per-draw Riemann bracket width
};

// One draw of Z_alpha with E[e^{-s Z}] = e^{-s^alpha}, by Kanter's
// representation.
double sample_stable(double alpha, Rng& rng);

// Truncated product over n = 0..N-1 of ((a+nb+c)/(a+nb)) * Beta(a+nb, c).
double sample_beta_product(double a, double b, double c,
                           const ProductConfig& cfg, Rng& rng);

struct PathStats {
  bool flagged = false;
  double bias = 0;
};

// weibull_int: int_0^inf ((1 - sigma_t)_+)^{rho-alpha} dt
// frechet_int: int_0^inf (1 + sigma_t)^{-rho-alpha} dt
// exp_int:     int_0^inf e^{-sigma_t} dt            (rho ignored)
double sample_functional(FunctionalKind kind, double alpha, double rho,
                         SampleMethod method, const PathConfig& pcfg,
                         const ProductConfig& ccfg, Rng& rng,
                         PathStats* stats = nullptr);

// n draws of the law d, combining a unit exponential with an independent
// functional draw for alpha in (0,1), or closed-form inverse-cdf sampling
// at the boundary orders.
SampleBatch sample_dist(const DistDescriptor& d, long n, RngState rng,
                        SampleMethod method = SampleMethod::beta_product,
                        const PathConfig& pcfg = {},
                        const ProductConfig& ccfg = {});

// a_n:          rho^{-n} prod_{k=1}^n Gamma(k rho + 1 - alpha)/Gamma(k rho)
// b_n:          rho^{-n} prod_{k=1}^n Gamma(k rho + 1)/Gamma(k rho + alpha)
// gumbel_exp_n: (n!)^{1-alpha}
// T_mellin:     E[T(a,b,c)^s] via the double-Gamma kernel
enum class MomentKind { a_n, b_n, gumbel_exp_n, T_mellin };

struct MomentParams {
  double alpha = 0, rho = 0;  // a_n / b_n / gumbel_exp_n
  double a = 0, b = 0, c = 0; // T_mellin
};

double moment_oracle(MomentKind kind, const MomentParams& p, double n_or_s);

struct CheckReport {
  std::string name;
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
  std::string detail;
};

// shanbhag_sreehari: L = L^alpha * Z_alpha^{-alpha}            (KS, 1%)
// exp_factorization: rho * frechet-side(1-alpha) * weibull-side(alpha)
//                    has mean 1                                 (3 SE)
// cpy_product:       L = exp_int(1-alpha) * exp_int(alpha)      (KS, 1%)
// pareto_endpoints:  alpha=0 Weibull-type law = ratio of unit
//                    exponentials to the power 1/rho            (KS, 1%)
// T_tail_loglaw:     log-tail slope of T(1,2,1) near b/c        (+-25%)
enum class IdentityName {
  shanbhag_sreehari,
  exp_factorization,
  cpy_product,
  pareto_endpoints,
  T_tail_loglaw
};

CheckReport check_identity(IdentityName name, long n_samples, RngState rng,
                           double alpha = 0.5, double rho = 1.5);

// Two-sample Kolmogorov-Smirnov statistic and the asymptotic threshold
// c(level) sqrt((n+m)/(n m)), c(0.01) = 1.628.
double ks_two_sample(std::vector<double> a, std::vector<double> b);
double ks_threshold(std::size_t n, std::size_t m, double level = 0.01);

}  // namespace fracx
