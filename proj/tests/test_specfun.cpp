#include <cmath>
#include <limits>

#include "doctest.h"
#include "fracx/errors.hpp"
#include "fracx/specfun.hpp"

using namespace fracx;

TEST_CASE("mittag_leffler closed points") {
  CHECK(mittag_leffler(1.0, 1.0, -1.0).value ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(mittag_leffler(0.5, 1.0, -1.0).value ==
        doctest::Approx(0.4275835761558070).epsilon(1e-12));
  CHECK(mittag_leffler(0.5, 1.0, 0.0).value == 1.0);
  CHECK(mittag_leffler(1.0, 1.0, 0.0).value == 1.0);
}

TEST_CASE("mittag_leffler erfcx cross-check") {
  // E_{1/2}(-x) = e^{x^2} erfc(x)
  for (double x : {0.25, 1.0, 3.0}) {
    double ref = std::exp(x * x) * std::erfc(x);
    EvalResult r = mittag_leffler(0.5, 1.0, -x);
    CHECK(std::abs(r.value - ref) <= r.abs_error_bound + 1e-13 * ref + 1e-15);
  }
}

TEST_CASE("kilbas_saigo closed points") {
  // alpha = 1 collapses to exp(z/(alpha m))
  CHECK(kilbas_saigo(KSParams(1.0, 2.0, 1.0), -1.0).value ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(kilbas_saigo(KSParams(0.7, 3.0, 2.0), 0.0).value == 1.0);
  EvalResult k = kilbas_saigo(KSParams(0.5, 1.0, 0.0), -1.0);
  EvalResult m = mittag_leffler(0.5, 1.0, -1.0);
  CHECK(std::abs(k.value - m.value) <= k.abs_error_bound + m.abs_error_bound);
}

TEST_CASE("kilbas_saigo two-parameter collapse") {
  for (double beta : {0.8, 1.5, 2.5}) {
    EvalResult k = kilbas_saigo(KSParams(0.5, 1.0, (beta - 1.0) / 0.5), -2.0);
    EvalResult m = mittag_leffler(0.5, beta, -2.0);
    double ref = std::tgamma(beta) * m.value;
    CHECK(std::abs(k.value - ref) <=
          k.abs_error_bound + std::tgamma(beta) * m.abs_error_bound + 1e-15);
  }
}

TEST_CASE("kilbas_saigo parameter validation") {
  CHECK_THROWS_AS(KSParams(1.5, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(KSParams(0.5, -1.0, 0.0), DomainError);
}

TEST_CASE("le_roy boundary orders and special values") {
  CHECK(le_roy(0.0, -1.0 + 1e-9).value == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(le_roy(0.0, -0.5).value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(le_roy(1.0, -1.0).value ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
  CHECK(le_roy(2.0, -1.0).value ==
        doctest::Approx(0.2238907791412357).epsilon(1e-12));  // J_0(2)
  CHECK(le_roy(0.5, -1.0).value ==
        doctest::Approx(0.43859989674884).epsilon(1e-11));
  CHECK_THROWS_AS(le_roy(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(le_roy(0.0, -1.5), DomainError);
}

TEST_CASE("hyperbolic bounds closed points") {
  auto [lo, hi] = hyperbolic_bounds(BoundFamily::weibull_ks, 0.5, 1.0, 1.0);
  CHECK(lo == doctest::Approx(0.3606913058889648).epsilon(1e-10));
  CHECK(hi == doctest::Approx(0.4698410957313811).epsilon(1e-10));
  double v = kilbas_saigo(KSParams(0.5, 1.0, 0.0), -1.0).value;
  CHECK(lo < v);
  CHECK(v < hi);

  auto [l0, h0] = hyperbolic_bounds(BoundFamily::weibull_ks, 0.3, 2.0, 0.0);
  CHECK(l0 == 1.0);
  CHECK(h0 == 1.0);

  auto [lm, hm] = hyperbolic_bounds(BoundFamily::ml_two_param, 0.5, 1.5, 2.0);
  CHECK(lm == doctest::Approx(0.3070537931849336).epsilon(1e-10));
  CHECK(hm == doctest::Approx(0.3606913058889648).epsilon(1e-10));

  auto [lf, hf] =
      hyperbolic_bounds(BoundFamily::frechet_ks_upper, 0.5, 2.0, 1.0);
  CHECK(lf == -std::numeric_limits<double>::infinity());
  CHECK(hf < 1.0);
}

TEST_CASE("leading asymptote constants") {
  AsymptoteSpec w = leading_asymptote(AsymFamily::weibull_ks, 0.5, 3.0);
  CHECK(w.constant == doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(1e-12));
  CHECK(w.power == 1.0);
  CHECK(w.log_power == 0.0);

  AsymptoteSpec l = leading_asymptote(AsymFamily::leroy, 0.5, 1.0);
  CHECK(l.constant == doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(1e-12));
  CHECK(l.power == 1.0);
  CHECK(l.log_power == 0.5);

  AsymptoteSpec f = leading_asymptote(AsymFamily::frechet_ks, 0.5, 1.0);
  CHECK(f.constant == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(f.power == 2.0);
}

TEST_CASE("certified bound honored when target tightens") {
  for (double z : {-0.5, -4.0, -30.0}) {
    EvalConfig loose, tight;
    tight.target_rel_error = loose.target_rel_error / 100.0;
    EvalResult a = kilbas_saigo(KSParams(0.4, 2.0, 1.0), z, loose);
    EvalResult b = kilbas_saigo(KSParams(0.4, 2.0, 1.0), z, tight);
    CHECK(std::abs(a.value - b.value) <= a.abs_error_bound);
  }
}

TEST_CASE("kilbas_saigo converges to le_roy in m") {
  double prev = 1e300;
  for (double m : {2.0, 4.0, 8.0, 16.0}) {
    double arg = std::pow(0.5 * m, 0.5) * 0.8;
    double v = kilbas_saigo(KSParams(0.5, m + 1.0, m), -arg).value;
    double gap = std::abs(v - le_roy(0.5, -0.8).value);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 0.02);
}
