#include <cmath>

#include "doctest.h"
#include "fracx/barnes.hpp"
#include "fracx/errors.hpp"
#include "fracx/specfun.hpp"

using namespace fracx;

TEST_CASE("double gamma closed points") {
  PochhammerContext c1{1.0}, c2{2.0};
  CHECK(log_double_gamma(1.0, c1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(log_double_gamma(2.0, c1)) < 1e-10);
  CHECK(log_double_gamma(2.0, c2) ==
        doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-10));
}

TEST_CASE("pochhammer closed points") {
  PochhammerContext c1{1.0};
  CHECK(std::abs(log_pochhammer(1.0, 2.0, c1)) < 1e-10);
  CHECK(log_pochhammer(2.0, 2.0, c1) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  PochhammerContext cd{0.7};
  CHECK(std::abs(log_pochhammer(0.7, 1.0, cd)) < 1e-10);
  CHECK_THROWS_AS(log_pochhammer(1.0, -1.5, c1), DomainError);
}

TEST_CASE("functional equation across deltas") {
  for (double d : {0.5, 1.0, 2.0, 5.0}) {
    PochhammerContext ctx{d};
    for (double z : {0.5, 1.0, 2.5, 7.0}) {
      double lhs = log_double_gamma(z + 1.0, ctx);
      double rhs = std::lgamma(z / d) + log_double_gamma(z, ctx);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("small and large modulus stay on the recursion rails") {
  // G(2;delta) = Gamma(1/delta) G(1;delta) = Gamma(1/delta)
  for (double d : {1.0 / 32.0, 1.0 / 8.0, 8.0, 32.0}) {
    PochhammerContext ctx{d};
    CHECK(log_double_gamma(2.0, ctx) ==
          doctest::Approx(std::lgamma(1.0 / d)).epsilon(1e-9));
  }
}

TEST_CASE("stirling growth of the second difference") {
  for (double d : {0.5, 1.0, 3.0}) {
    PochhammerContext ctx{d};
    double second = log_double_gamma(52.0, ctx) -
                    2.0 * log_double_gamma(51.0, ctx) +
                    log_double_gamma(50.0, ctx);
    // shift identity applied twice: second = lgamma(51/d) - lgamma(50/d),
    // which grows like log(50/d)/d
    CHECK(second == doctest::Approx(std::log(50.0 / d) / d).epsilon(0.02));
  }
}

TEST_CASE("mellin kernels") {
  PochhammerContext c1{1.0};
  MellinKernelParams t = mellin_T(1.0, 1.0, 1.0);
  CHECK(mellin_kernel(t, 0.0, c1) == 1.0);
  CHECK(mellin_kernel(t, 2.0, c1) == doctest::Approx(2.0).epsilon(1e-8));

  MellinKernelParams y = mellin_Y(KSParams(0.5, 1.0, 0.0));
  CHECK(mellin_kernel(y, 1.0, c1) ==
        doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-8));
  CHECK(mellin_kernel(y, 0.0, c1) == 1.0);

  // b + d > a + c violates the existence condition
  MellinKernelParams z = mellin_Z(1.0, 1.0, 2.0, 1.5, 1.0);
  CHECK_THROWS_AS(mellin_kernel(z, 1.0, c1), NotARandomVariable);
}
