#include "fracx/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracx/errors.hpp"
#include "fracx/gamma_ratio.hpp"

namespace fracx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EvalResult closed_form(double v, double rel = 4e-16) {
  EvalResult r;
  r.value = v;
  r.abs_error_bound = rel * std::abs(v);
  r.terms_used = 1;
  r.precision_bits_used = 53;
  return r;
}

// Coefficients shifted by one index: c'_n = c_{n+1} of a base series whose
// leading coefficient is 1.  Used for the complement of sf/cdf series
// F(z) = 1 + sum_{n>=1} c_n z^n, so that 1 - F(-z) = z * sum c'_n (-z)^n
// evaluates without 1-(1-eps) cancellation.
class ShiftedCoeffs final : public SeriesCoeffs {
 public:
  explicit ShiftedCoeffs(std::shared_ptr<const SeriesCoeffs> base)
      : base_(std::move(base)) {}
  double log_c0() const override {
    return base_->log_c0() + base_->log_ratio(0);
  }
  void log_c0_big(BigFloat& out) const override {
    base_->log_c0_big(out);
    BigFloat r0(out.prec());
    base_->ratio_stream(out.prec())->next(r0);
    mpfr_log(r0.raw(), r0.raw(), MPFR_RNDN);
    mpfr_add(out.raw(), out.raw(), r0.raw(), MPFR_RNDN);
  }
  double log_ratio(long n) const override { return base_->log_ratio(n + 1); }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    class Skip final : public RatioStream {
     public:
      explicit Skip(std::unique_ptr<RatioStream> inner)
          : inner_(std::move(inner)) {
        BigFloat drop(53);
        inner_->next(drop);
      }
      void next(BigFloat& out) override { inner_->next(out); }

     private:
      std::unique_ptr<RatioStream> inner_;
    };
    return std::make_unique<Skip>(base_->ratio_stream(prec));
  }

 private:
  std::shared_ptr<const SeriesCoeffs> base_;
};

// Density series for the Weibull- and Frechet-type laws:
//   c_n = prod_{k=1}^{n+1} Gamma(k rho + da) / Gamma(k rho + db)
//         / (rho^n n!)
// parameterized by the step-n ratio arguments ga0 + n rho, gb0 + n rho
// (so c_0 uses ga0 - rho, gb0 - rho).
class GammaProdDensityCoeffs final : public SeriesCoeffs {
 public:
  GammaProdDensityCoeffs(double ga0, double gb0, double rho)
      : ga0_(ga0), gb0_(gb0), rho_(rho) {}
  double log_c0() const override {
    return std::lgamma(ga0_ - rho_) - std::lgamma(gb0_ - rho_);
  }
  void log_c0_big(BigFloat& out) const override {
    BigFloat t(out.prec());
    bf_set_d(t, ga0_ - rho_);
    detail::fast_lngamma(out, t);
    bf_set_d(t, gb0_ - rho_);
    BigFloat lg(out.prec());
    detail::fast_lngamma(lg, t);
    mpfr_sub(out.raw(), out.raw(), lg.raw(), MPFR_RNDN);
  }
  double log_ratio(long n) const override {
    double a = ga0_ + static_cast<double>(n) * rho_;
    double b = gb0_ + static_cast<double>(n) * rho_;
    return std::lgamma(a) - std::lgamma(b) -
           std::log(rho_ * static_cast<double>(n + 1));
  }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    double rho = rho_;
    return std::make_unique<GammaRatioStream>(
        ga0_, gb0_, rho_, prec, [rho](long n, BigFloat& io) {
          mpfr_div_d(io.raw(), io.raw(), rho, MPFR_RNDN);
          mpfr_div_ui(io.raw(), io.raw(),
                      static_cast<unsigned long>(n + 1), MPFR_RNDN);
        });
  }

 private:
  double ga0_, gb0_, rho_;
};

// Density series for the Gumbel-type law: c_n = (n+1) / ((n+1)!)^alpha.
class GumbelDensityCoeffs final : public SeriesCoeffs {
 public:
  explicit GumbelDensityCoeffs(double alpha) : alpha_(alpha) {}
  double log_ratio(long n) const override {
    return (1.0 - alpha_) * std::log(static_cast<double>(n + 2)) -
           std::log(static_cast<double>(n + 1));
  }
  std::unique_ptr<RatioStream> ratio_stream(mpfr_prec_t prec) const override {
    class Stream final : public RatioStream {
     public:
      Stream(double alpha, mpfr_prec_t prec) : alpha_(alpha), t_(prec) {}
      void next(BigFloat& out) override {
        ++n_;
        mpfr_set_si(t_.raw(), n_ + 1, MPFR_RNDN);
        mpfr_log(t_.raw(), t_.raw(), MPFR_RNDN);
        mpfr_mul_d(t_.raw(), t_.raw(), 1.0 - alpha_, MPFR_RNDN);
        bf_exp(out, t_);
        mpfr_div_ui(out.raw(), out.raw(), static_cast<unsigned long>(n_),
                    MPFR_RNDN);
      }

     private:
      double alpha_;
      long n_ = 0;
      BigFloat t_;
    };
    return std::make_unique<Stream>(alpha_, prec);
  }

 private:
  double alpha_;
};

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

DistDescriptor make_dist(DistKind kind, double alpha, double lambda,
                         double rho) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("make_dist: alpha must lie in [0,1]");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("make_dist: lambda must be positive and finite");
  if (kind == DistKind::fgumbel) {
    rho = 1.0;
  } else if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("make_dist: rho must be positive and finite");
  }
  return DistDescriptor{kind, alpha, lambda, rho};
}

DistEngine::DistEngine(const DistDescriptor& d) : d_(d) {
  const double a = d_.alpha, r = d_.rho;
  if (a > 0.0 && a < 1.0) {
    switch (d_.kind) {
      case DistKind::fweibull:
        primary_ = std::make_unique<SeriesEvaluator>(
            make_ks_series(KSParams(a, r / a, r / a - 1.0)));
        density_ = std::make_unique<SeriesEvaluator>(
            std::make_shared<GammaProdDensityCoeffs>(2.0 * r + 1.0 - a,
                                                     2.0 * r, r));
        break;
      case DistKind::ffrechet:
        primary_ = std::make_unique<SeriesEvaluator>(
            make_ks_series(KSParams(a, r / a, (r - 1.0) / a)));
        density_ = std::make_unique<SeriesEvaluator>(
            std::make_shared<GammaProdDensityCoeffs>(2.0 * r + 1.0,
                                                     2.0 * r + a, r));
        break;
      case DistKind::fgumbel:
        primary_ = std::make_unique<SeriesEvaluator>(make_leroy_series(a));
        density_ = std::make_unique<SeriesEvaluator>(
            std::make_shared<GumbelDensityCoeffs>(a));
        break;
    }
  }
}

double DistEngine::series_arg(double x) const {
  switch (d_.kind) {
    case DistKind::fweibull:
      return d_.lambda * std::pow(x, d_.rho);
    case DistKind::ffrechet:
      return d_.lambda * std::pow(x, -d_.rho);
    case DistKind::fgumbel:
      return std::exp(d_.lambda * x);
  }
  return 0;
}

EvalResult DistEngine::primary(double x, const EvalConfig& cfg) const {
  EvalResult r = primary_->eval(-series_arg(x), cfg);
  r.value = clamp01(r.value);
  return r;
}

EvalResult DistEngine::sf(double x, const EvalConfig& cfg) const {
  const double a = d_.alpha, l = d_.lambda, r = d_.rho;
  switch (d_.kind) {
    case DistKind::fweibull:
    case DistKind::ffrechet: {
      if (std::isnan(x) || x < 0.0)
        throw DomainError("sf: x outside support closure");
      if (x == kInf) return closed_form(0.0, 0.0);
      if (d_.kind == DistKind::fweibull) {
        if (x == 0.0) return closed_form(1.0, 0.0);
        double z = l * std::pow(x, r);
        if (a == 0.0) return closed_form(1.0 / (1.0 + z));
        if (a == 1.0) return closed_form(std::exp(-z / r));
        return primary(x, cfg);
      }
      // ffrechet: sf = 1 - cdf via the shifted complement series
      if (x == 0.0) return closed_form(1.0, 0.0);
      double z = l * std::pow(x, -r);
      if (a == 0.0) return closed_form(z / (1.0 + z));
      if (a == 1.0) return closed_form(-std::expm1(-z / r));
      EvalResult s = shifted_eval(-z, cfg);
      s.value = clamp01(z * s.value);
      s.abs_error_bound = z * s.abs_error_bound + 4e-16 * s.value;
      return s;
    }
    case DistKind::fgumbel: {
      if (std::isnan(x)) throw DomainError("sf: x must not be NaN");
      if (x == -kInf) return closed_form(1.0, 0.0);
      if (x == kInf) return closed_form(0.0, 0.0);
      if (a == 0.0) return closed_form(1.0 / (1.0 + std::exp(l * x)));
      if (a == 1.0) return closed_form(std::exp(-std::exp(l * x)));
      return primary(x, cfg);
    }
  }
  throw DomainError("sf: unknown kind");
}

EvalResult DistEngine::cdf(double x, const EvalConfig& cfg) const {
  const double a = d_.alpha, l = d_.lambda, r = d_.rho;
  switch (d_.kind) {
    case DistKind::fweibull: {
      if (std::isnan(x) || x < 0.0)
        throw DomainError("cdf: x outside support closure");
      if (x == kInf) return closed_form(1.0, 0.0);
      if (x == 0.0) return closed_form(0.0, 0.0);
      double z = l * std::pow(x, r);
      if (a == 0.0) return closed_form(z / (1.0 + z));
      if (a == 1.0) return closed_form(-std::expm1(-z / r));
      EvalResult s = shifted_eval(-z, cfg);
      s.value = clamp01(z * s.value);
      s.abs_error_bound = z * s.abs_error_bound + 4e-16 * s.value;
      return s;
    }
    case DistKind::ffrechet: {
      if (std::isnan(x) || x < 0.0)
        throw DomainError("cdf: x outside support closure");
      if (x == kInf) return closed_form(1.0, 0.0);
      if (x == 0.0) return closed_form(0.0, 0.0);
      double z = l * std::pow(x, -r);
      if (a == 0.0) return closed_form(1.0 / (1.0 + z));
      if (a == 1.0) return closed_form(std::exp(-z / r));
      return primary(x, cfg);
    }
    case DistKind::fgumbel: {
      if (std::isnan(x)) throw DomainError("cdf: x must not be NaN");
      if (x == -kInf) return closed_form(0.0, 0.0);
      if (x == kInf) return closed_form(1.0, 0.0);
      double u = std::exp(l * x);
      if (a == 0.0) return closed_form(1.0 / (1.0 + std::exp(-l * x)));
      if (a == 1.0) return closed_form(-std::expm1(-u));
      EvalResult s = shifted_eval(-u, cfg);
      s.value = clamp01(u * s.value);
      s.abs_error_bound = u * s.abs_error_bound + 4e-16 * s.value;
      return s;
    }
  }
  throw DomainError("cdf: unknown kind");
}

EvalResult DistEngine::shifted_eval(double z, const EvalConfig& cfg) const {
  if (!shifted_) {
    std::shared_ptr<const SeriesCoeffs> base;
    switch (d_.kind) {
      case DistKind::fweibull:
        base = ks_coeffs(KSParams(d_.alpha, d_.rho / d_.alpha,
                                  d_.rho / d_.alpha - 1.0));
        break;
      case DistKind::ffrechet:
        base = ks_coeffs(KSParams(d_.alpha, d_.rho / d_.alpha,
                                  (d_.rho - 1.0) / d_.alpha));
        break;
      case DistKind::fgumbel:
        base = leroy_coeffs(d_.alpha);
        break;
    }
    shifted_ = std::make_unique<SeriesEvaluator>(
        std::make_shared<ShiftedCoeffs>(std::move(base)));
  }
  return shifted_->eval(z, cfg);
}

EvalResult DistEngine::pdf(double x, const EvalConfig& cfg) const {
  const double a = d_.alpha, l = d_.lambda, r = d_.rho;
  switch (d_.kind) {
    case DistKind::fweibull: {
      if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("pdf: x outside open support");
      double z = l * std::pow(x, r);
      double pf = l * std::pow(x, r - 1.0);
      if (a == 0.0) {
        double q = 1.0 + z;
        return closed_form(pf * r / (q * q));
      }
      if (a == 1.0) return closed_form(pf * std::exp(-z / r));
      EvalResult s = density_->eval(-z, cfg);
      s.abs_error_bound = pf * s.abs_error_bound + 4e-16 * pf * std::abs(s.value);
      s.value = pf * s.value;
      if (s.value < 0.0 && -s.value <= s.abs_error_bound) s.value = 0.0;
      return s;
    }
    case DistKind::ffrechet: {
      if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("pdf: x outside open support");
      double z = l * std::pow(x, -r);
      double pf = l * std::pow(x, -r - 1.0);
      if (a == 0.0) {
        double q = 1.0 + z;
        return closed_form(pf * r / (q * q));
      }
      if (a == 1.0) return closed_form(pf * std::exp(-z / r));
      EvalResult s = density_->eval(-z, cfg);
      s.abs_error_bound = pf * s.abs_error_bound + 4e-16 * pf * std::abs(s.value);
      s.value = pf * s.value;
      if (s.value < 0.0 && -s.value <= s.abs_error_bound) s.value = 0.0;
      return s;
    }
    case DistKind::fgumbel: {
      if (!std::isfinite(x)) throw DomainError("pdf: x must be finite");
      double u = std::exp(l * x);
      if (a == 0.0) {
        double c = std::cosh(0.5 * l * x);
        return closed_form(0.25 * l / (c * c));
      }
      if (a == 1.0) return closed_form(l * std::exp(l * x - u));
      double pf = l * u;
      EvalResult s = density_->eval(-u, cfg);
      s.abs_error_bound = pf * s.abs_error_bound + 4e-16 * pf * std::abs(s.value);
      s.value = pf * s.value;
      if (s.value < 0.0 && -s.value <= s.abs_error_bound) s.value = 0.0;
      return s;
    }
  }
  throw DomainError("pdf: unknown kind");
}

double DistEngine::quantile(double p, const EvalConfig& cfg) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: p must lie in (0,1)");
  const double a = d_.alpha, l = d_.lambda, r = d_.rho;

  // closed-form boundary orders
  if (a == 0.0 || a == 1.0) {
    switch (d_.kind) {
      case DistKind::fweibull:
        return (a == 0.0)
                   ? std::pow(p / ((1.0 - p) * l), 1.0 / r)
                   : std::pow(-(r / l) * std::log1p(-p), 1.0 / r);
      case DistKind::ffrechet:
        return (a == 0.0)
                   ? std::pow(l * p / (1.0 - p), 1.0 / r)
                   : std::pow(-(r / l) * std::log(p), -1.0 / r);
      case DistKind::fgumbel:
        return (a == 0.0)
                   ? std::log(p / (1.0 - p)) / l
                   : std::log(-std::log1p(-p)) / l;
    }
  }

  EvalConfig qcfg = cfg;
  qcfg.target_rel_error = std::min(cfg.target_rel_error, 1e-12);
  // Root finding probes the far tails, where the series argument can demand
  // precision that is affordable in principle but ruinous in practice.  Cap
  // the probes; a non-convergent probe is always in the extreme tail, whose
  // direction is known per family (ffrechet blows up as x -> 0+, the others
  // as x -> +inf), so report the corresponding cdf limit.
  qcfg.max_precision_bits = std::min(qcfg.max_precision_bits, 2048L);
  const double overflow_cdf = (d_.kind == DistKind::ffrechet) ? 0.0 : 1.0;
  auto F = [&](double x) {
    try {
      return cdf(x, qcfg).value;
    } catch (const NonConvergent&) {
      return overflow_cdf;
    }
  };

  // bracket around the alpha = 0 quantile of the same family
  double lo, hi;
  if (d_.kind == DistKind::fgumbel) {
    double x0 = std::log(p / (1.0 - p)) / l;
    double step = 1.0 / l;
    lo = x0;
    while (F(lo) > p) {
      lo -= step;
      step *= 2.0;
    }
    step = 1.0 / l;
    hi = x0;
    while (F(hi) < p) {
      hi += step;
      step *= 2.0;
    }
  } else {
    double x0 = (d_.kind == DistKind::fweibull)
                    ? std::pow(p / ((1.0 - p) * l), 1.0 / r)
                    : std::pow(l * p / (1.0 - p), 1.0 / r);
    lo = hi = x0;
    while (F(lo) > p) lo *= 0.5;
    while (F(hi) < p) hi *= 2.0;
  }

  auto bisect = [&] {
    for (int i = 0; i < 60 && hi - lo > 0; ++i) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (F(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double x = bisect();
  // A residual at the probe cap means the root sits past the feasibility
  // edge of the capped probes; escalate the cap toward the caller's budget
  // and resume on the surviving bracket.
  while (std::abs(F(x) - p) > 1e-9) {
    if (qcfg.max_precision_bits >= cfg.max_precision_bits)
      throw NonConvergent(
          "quantile: root needs precision beyond the configured budget");
    qcfg.max_precision_bits =
        std::min(4 * qcfg.max_precision_bits, cfg.max_precision_bits);
    x = bisect();
  }

  // one Newton polish
  double f;
  try {
    f = pdf(x, qcfg).value;
  } catch (const NonConvergent&) {
    f = 0.0;
  }
  if (f > 0.0 && std::isfinite(f)) {
    double step = (F(x) - p) / f;
    double xn = x - step;
    if (xn > lo && xn < hi) x = xn;
  }
  return x;
}

EvalResult sf(const DistDescriptor& d, double x, const EvalConfig& cfg) {
  return DistEngine(d).sf(x, cfg);
}
EvalResult cdf(const DistDescriptor& d, double x, const EvalConfig& cfg) {
  return DistEngine(d).cdf(x, cfg);
}
EvalResult pdf(const DistDescriptor& d, double x, const EvalConfig& cfg) {
  return DistEngine(d).pdf(x, cfg);
}
double quantile(const DistDescriptor& d, double p, const EvalConfig& cfg) {
  return DistEngine(d).quantile(p, cfg);
}

double mellin(const DistDescriptor& d, double s, const PochhammerContext& ctx) {
  const double a = d.alpha, l = d.lambda, r = d.rho;
  if (s == 0.0) return 1.0;
  switch (d.kind) {
    case DistKind::fweibull: {
      double t = s / r;
      // alpha = 1 has an exponential upper tail: all positive moments exist
      if (a == 1.0) {
        if (!(s > -r)) throw DomainError("mellin: s must exceed -rho");
        return std::pow(r / l, t) * std::tgamma(1.0 + t);
      }
      if (!(s > -r && s < r))
        throw DomainError("mellin: s outside the strip (-rho, rho)");
      if (a == 0.0)
        return std::pow(l, -t) * std::tgamma(1.0 + t) * std::tgamma(1.0 - t);
      PochhammerContext c{r, ctx.quad_tol};
      return std::exp(t * (a * std::log(r) - std::log(l)) +
                      std::lgamma(1.0 + t) +
                      log_pochhammer(r + 1.0 - a, -s, c) -
                      log_pochhammer(r, -s, c));
    }
    case DistKind::ffrechet: {
      double t = s / r;
      // alpha = 1 has an exponential lower tail: all negative moments exist
      if (a == 1.0) {
        if (!(s < r)) throw DomainError("mellin: s must stay below rho");
        return std::pow(l / r, t) * std::tgamma(1.0 - t);
      }
      if (!(s > -r - a && s < r))
        throw DomainError("mellin: s outside the strip (-rho-alpha, rho)");
      if (a == 0.0)
        return std::pow(l, t) * std::tgamma(1.0 + t) * std::tgamma(1.0 - t);
      PochhammerContext c{r, ctx.quad_tol};
      return std::exp(-t * (a * std::log(r) - std::log(l)) +
                      std::lgamma(1.0 - t) +
                      log_pochhammer(r + 1.0, s, c) -
                      log_pochhammer(r + a, s, c));
    }
    case DistKind::fgumbel: {
      if (!(s > -l && s < l))
        throw DomainError("mellin: s outside the strip (-lambda, lambda)");
      double t = s / l;
      return std::exp(std::lgamma(1.0 + t) +
                      (1.0 - a) * std::lgamma(1.0 - t));
    }
  }
  throw DomainError("mellin: unknown kind");
}

AsymptoteSpec support_asymptote(const DistDescriptor& d, SupportEnd end) {
  const double a = d.alpha, l = d.lambda, r = d.rho;
  if (!(a > 0.0 && a < 1.0))
    throw DomainError(
        "support_asymptote: alpha must lie in (0,1); the boundary orders "
        "have global closed forms");
  AsymptoteSpec s;
  switch (d.kind) {
    case DistKind::fweibull:
      if (end == SupportEnd::lower) {
        s.constant = l * std::exp(std::lgamma(r + 1.0 - a) - std::lgamma(r));
        s.power = r - 1.0;
      } else {
        s.constant = r / (l * std::tgamma(1.0 - a));
        s.power = -r - 1.0;
      }
      return s;
    case DistKind::ffrechet:
      if (end == SupportEnd::upper) {
        s.constant = l * std::exp(std::lgamma(r + 1.0) - std::lgamma(r + a));
        s.power = -r - 1.0;
      } else {
        PochhammerContext ctx{r};
        double lg = log_double_gamma(1.0 - a, ctx) +
                    log_double_gamma(1.0 + a, ctx);
        s.constant = std::pow(r, a * a / r) * (r + a) *
                     std::pow(l, -(1.0 + a / r)) * std::tgamma(1.0 + a) *
                     std::exp(lg);
        s.power = r + a - 1.0;
      }
      return s;
    case DistKind::fgumbel:
      if (end == SupportEnd::upper) {
        s.constant = std::pow(l, 1.0 - a) / std::tgamma(1.0 - a);
        s.power = -a;
        s.exp_rate = l;
      } else {
        s.constant = l;
        s.power = 0.0;
        s.exp_rate = l;
      }
      return s;
  }
  throw DomainError("support_asymptote: unknown kind");
}

}  // namespace fracx
