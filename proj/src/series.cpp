#include "fracx/series.hpp"

#include <algorithm>
#include <cmath>

#include "fracx/errors.hpp"

namespace fracx {

namespace {
constexpr double kLog2 = 0.6931471805599453;
}

SeriesEvaluator::SeriesEvaluator(std::shared_ptr<const SeriesCoeffs> coeffs)
    : coeffs_(std::move(coeffs)) {}

void SeriesEvaluator::ensure_coeffs(long n, mpfr_prec_t prec) const {
  if (prec > cache_prec_) {
    cache_.clear();
    stream_.reset();
    cache_prec_ = prec;
  }
  if (cache_.empty()) {
    BigFloat lc0(cache_prec_);
    coeffs_->log_c0_big(lc0);
    BigFloat c0(cache_prec_);
    bf_exp(c0, lc0);
    cache_.push_back(std::move(c0));
    stream_ = coeffs_->ratio_stream(cache_prec_);
  }
  BigFloat r(cache_prec_);
  while (static_cast<long>(cache_.size()) <= n) {
    stream_->next(r);
    BigFloat next = cache_.back();
    next *= r;
    cache_.push_back(std::move(next));
  }
}

EvalResult SeriesEvaluator::eval(double z, const EvalConfig& cfg_in) const {
  EvalConfig cfg = cfg_in.with_env_cap();
  if (!(cfg.target_rel_error > 0 && cfg.target_rel_error < 1))
    throw DomainError("target_rel_error must lie in (0,1)");
  if (!std::isfinite(z)) throw DomainError("series argument must be finite");

  if (z == 0.0) {
    EvalResult r;
    r.value = std::exp(coeffs_->log_c0());
    r.abs_error_bound = (coeffs_->log_c0() == 0.0) ? 0.0 : 4e-16 * std::abs(r.value);
    r.terms_used = 1;
    r.precision_bits_used = 53;
    return r;
  }

  // Prescan in doubles: peak log-magnitude of the terms and a rough
  // truncation index.  The absolute floor assumes the sum is not smaller
  // than ~1e-20; the certified pass stops on its own relative rule.
  const double lz = std::log(std::abs(z));
  const double stop_log = std::log(cfg.target_rel_error) - std::log(10.0) - 46.0;
  double cum = coeffs_->log_c0();
  double peak = cum;
  long n = 0;
  while (n < cfg.max_terms) {
    double r = coeffs_->log_ratio(n) + lz;
    cum += r;
    ++n;
    peak = std::max(peak, cum);
    if (cum < stop_log && r < 0) break;
  }
  if (n >= cfg.max_terms)
    throw NonConvergent("series truncation index exceeds max_terms", n, 0);

  long prec = static_cast<long>(std::max(0.0, peak / kLog2)) + 53 + 32;
  if (prec > cfg.max_precision_bits)
    throw NonConvergent("required precision exceeds max_precision_bits", n, prec);

  while (true) {
    BigFloat sum(static_cast<mpfr_prec_t>(prec));
    BigFloat zp(static_cast<mpfr_prec_t>(prec));
    BigFloat term(static_cast<mpfr_prec_t>(prec));
    bf_set_d(zp, 1.0);

    long k = 0;
    int below = 0;
    double prev_lt = 1e308;
    double first_omitted = 0;
    bool done = false;
    while (k < cfg.max_terms) {
      ensure_coeffs(k, static_cast<mpfr_prec_t>(prec));
      term = cache_[static_cast<size_t>(k)];
      term *= zp;
      sum += term;
      mpfr_mul_d(zp.raw(), zp.raw(), z, MPFR_RNDN);
      ++k;
      double lt = term.log2_abs();
      double ls = sum.log2_abs();
      bool small = lt < ls + std::log2(cfg.target_rel_error) - std::log2(10.0);
      if (small && lt <= prev_lt) {
        if (++below >= 3) {
          first_omitted =
              std::exp2(lt + (coeffs_->log_ratio(k - 1) + lz) / kLog2);
          done = true;
          break;
        }
      } else {
        below = 0;
      }
      prev_lt = lt;
    }
    if (!done)
      throw NonConvergent("series did not meet stop rule within max_terms", k, prec);

    EvalResult r;
    r.value = sum.to_double();
    r.terms_used = k;
    r.precision_bits_used = prec;
    // Rounding envelope: each cached coefficient accumulates a handful of
    // roundings per step (chain recurrences included), all below the peak
    // term magnitude.
    double rounding = std::exp2(std::log2(static_cast<double>(k)) + 4.0 -
                                static_cast<double>(prec) +
                                std::max(peak, 0.0) / kLog2);
    r.abs_error_bound = 2.0 * first_omitted + rounding;
    if (std::isfinite(r.value) &&
        r.abs_error_bound <=
        cfg.target_rel_error * std::max(1.0, std::abs(r.value)))
      return r;

    prec *= 2;
    if (prec > cfg.max_precision_bits)
      throw NonConvergent("certified bound not met within precision budget", k,
                          prec);
  }
}

}  // namespace fracx
