#include "fracx/specfun.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "fracx/barnes.hpp"
#include "fracx/errors.hpp"
#include "fracx/gamma_ratio.hpp"

namespace fracx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class MLCoeffs final : public SeriesCoeffs {
 public:
  MLCoeffs(double alpha, double beta) : alpha_(alpha), beta_(beta) {}
  double log_c0() const override { return -std::lgamma(beta_); }
  void log_c0_big(BigFloat& out) const override {
    BigFloat b(beta_, out.prec());
    detail::fast_lngamma(out, b);
    mpfr_neg(out.raw(), out.raw(), MPFR_RNDN);
  }
  double log_ratio(long n) const override {
    return std::lgamma(beta_ + static_cast<double>(n) * alpha_) -
           std::lgamma(beta_ + static_cast<double>(n + 1) * alpha_);
  }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    return std::make_unique<GammaRatioStream>(beta_, beta_ + alpha_, alpha_,
                                              prec);
  }

 private:
  double alpha_, beta_;
};

class KSCoeffs final : public SeriesCoeffs {
 public:
  explicit KSCoeffs(const KSParams& p) : p_(p) {}
  double log_ratio(long n) const override {
    double q = static_cast<double>(n) * p_.m + p_.l;
    if (p_.alpha == 1.0) return -std::log(1.0 + q);
    return std::lgamma(1.0 + p_.alpha * q) -
           std::lgamma(1.0 + p_.alpha * (q + 1.0));
  }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    return std::make_unique<GammaRatioStream>(1.0 + p_.alpha * p_.l,
                                              1.0 + p_.alpha * (p_.l + 1.0),
                                              p_.alpha * p_.m, prec);
  }

 private:
  KSParams p_;
};

class LeRoyStream final : public RatioStream {
 public:
  LeRoyStream(double alpha, mpfr_prec_t prec) : alpha_(alpha), t_(prec) {}
  void next(BigFloat& out) override {
    mpfr_set_si(t_.raw(), ++n_, MPFR_RNDN);
    mpfr_log(t_.raw(), t_.raw(), MPFR_RNDN);
    mpfr_mul_d(t_.raw(), t_.raw(), -alpha_, MPFR_RNDN);
    bf_exp(out, t_);
  }

 private:
  double alpha_;
  long n_ = 0;
  BigFloat t_;
};

class LeRoyCoeffs final : public SeriesCoeffs {
 public:
  explicit LeRoyCoeffs(double alpha) : alpha_(alpha) {}
  double log_ratio(long n) const override {
    return -alpha_ * std::log(static_cast<double>(n + 1));
  }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    return std::make_unique<LeRoyStream>(alpha_, prec);
  }

 private:
  double alpha_;
};

double gamma_ratio(double a, double b) {
  // Gamma(a)/Gamma(b) for positive arguments.
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

}  // namespace

KSParams::KSParams(double alpha_, double m_, double l_)
    : alpha(alpha_), m(m_), l(l_) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("KSParams: alpha must lie in (0,1]");
  if (!(m > 0.0)) throw DomainError("KSParams: m must be positive");
  if (!(l > -1.0 / alpha)) throw DomainError("KSParams: l must exceed -1/alpha");
}

std::shared_ptr<const SeriesCoeffs> ks_coeffs(const KSParams& p) {
  return std::make_shared<KSCoeffs>(p);
}
std::shared_ptr<const SeriesCoeffs> ml_coeffs(double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainError("mittag_leffler: alpha must be positive");
  if (!(beta > 0.0)) throw DomainError("mittag_leffler: beta must be positive");
  return std::make_shared<MLCoeffs>(alpha, beta);
}
std::shared_ptr<const SeriesCoeffs> leroy_coeffs(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("le_roy series: alpha must be positive");
  return std::make_shared<LeRoyCoeffs>(alpha);
}

SeriesEvaluator make_ks_series(const KSParams& p) {
  return SeriesEvaluator(ks_coeffs(p));
}
SeriesEvaluator make_ml_series(double alpha, double beta) {
  return SeriesEvaluator(ml_coeffs(alpha, beta));
}
SeriesEvaluator make_leroy_series(double alpha) {
  return SeriesEvaluator(leroy_coeffs(alpha));
}

EvalResult mittag_leffler(double alpha, double beta, double z,
                          const EvalConfig& cfg) {
  return make_ml_series(alpha, beta).eval(z, cfg);
}

EvalResult kilbas_saigo(const KSParams& p, double z, const EvalConfig& cfg) {
  return make_ks_series(p).eval(z, cfg);
}

EvalResult le_roy(double alpha, double z, const EvalConfig& cfg) {
  if (!(alpha >= 0.0)) throw DomainError("le_roy: alpha must be non-negative");
  if (alpha == 0.0) {
    if (!(std::abs(z) < 1.0))
      throw DomainError("le_roy: alpha=0 requires |z| < 1");
    EvalResult r;
    r.value = 1.0 / (1.0 - z);
    r.abs_error_bound = 4e-16 * std::abs(r.value);
    r.terms_used = 1;
    r.precision_bits_used = 53;
    return r;
  }
  return make_leroy_series(alpha).eval(z, cfg);
}

std::pair<double, double> hyperbolic_bounds(BoundFamily family, double alpha,
                                            double aux, double x) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("hyperbolic_bounds: alpha must lie in (0,1]");
  if (!(x >= 0.0)) throw DomainError("hyperbolic_bounds: x must be >= 0");
  switch (family) {
    case BoundFamily::weibull_ks: {
      double m = aux;
      if (!(m > 0.0)) throw DomainError("hyperbolic_bounds: m must be positive");
      double lo = (alpha == 1.0) ? (x > 0 ? 0.0 : 1.0)
                                 : 1.0 / (1.0 + std::tgamma(1.0 - alpha) * x);
      double hi = 1.0 / (1.0 + gamma_ratio(1.0 + alpha * (m - 1.0),
                                           1.0 + alpha * m) * x);
      return {lo, hi};
    }
    case BoundFamily::frechet_ks_upper: {
      double m = aux;
      if (!(m > 0.0)) throw DomainError("hyperbolic_bounds: m must be positive");
      double hi = std::pow(1.0 + gamma_ratio(1.0 + alpha * m,
                                             1.0 + alpha * (m + 1.0)) * x,
                           -(1.0 + 1.0 / m));
      return {-kInf, hi};
    }
    case BoundFamily::frechet_ks_lower_m1: {
      if (alpha == 1.0) return {x > 0 ? 0.0 : 1.0, kInf};
      double s = std::sqrt(std::tgamma(1.0 - alpha) / std::tgamma(1.0 + alpha));
      double lo = std::pow(1.0 + s * x, -2.0);
      return {lo, kInf};
    }
    case BoundFamily::ml_two_param: {
      double beta = aux;
      if (!(beta > alpha))
        throw DomainError("hyperbolic_bounds: beta must exceed alpha");
      double lo = 1.0 / (1.0 + gamma_ratio(beta - alpha, beta) * x);
      double hi = 1.0 / (1.0 + gamma_ratio(beta, beta + alpha) * x);
      return {lo, hi};
    }
    case BoundFamily::leroy_sandwich: {
      double m = aux;
      if (!(m > 0.0)) throw DomainError("hyperbolic_bounds: m must be positive");
      double lo = kilbas_saigo(KSParams(alpha, m, m - 1.0 / alpha),
                               -std::pow(alpha * (m + 1.0), alpha) * x)
                      .value;
      double hi = kilbas_saigo(KSParams(alpha, m + 1.0, m),
                               -std::pow(alpha * m, alpha) * x)
                      .value;
      return {lo, hi};
    }
  }
  throw DomainError("hyperbolic_bounds: unknown family");
}

AsymptoteSpec leading_asymptote(AsymFamily family, double alpha, double m) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("leading_asymptote: alpha must lie in (0,1)");
  AsymptoteSpec s;
  switch (family) {
    case AsymFamily::weibull_ks:
      s.constant = 1.0 / std::tgamma(1.0 - alpha);
      s.power = 1.0;
      return s;
    case AsymFamily::frechet_ks: {
      if (!(m > 0.0)) throw DomainError("leading_asymptote: m must be positive");
      PochhammerContext ctx{alpha * m};
      double lg = log_double_gamma(1.0 - alpha, ctx) +
                  log_double_gamma(1.0 + alpha, ctx);
      s.constant = std::pow(alpha * m, alpha / m) * std::tgamma(1.0 + alpha) *
                   std::exp(lg);
      s.power = 1.0 + 1.0 / m;
      return s;
    }
    case AsymFamily::leroy:
      s.constant = 1.0 / std::tgamma(1.0 - alpha);
      s.power = 1.0;
      s.log_power = alpha;
      return s;
  }
  throw DomainError("leading_asymptote: unknown family");
}

}  // namespace fracx
