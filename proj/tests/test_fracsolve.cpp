#include <cmath>

#include "doctest.h"
#include "fracx/dist.hpp"
#include "fracx/errors.hpp"
#include "fracx/fracsolve.hpp"
#include "fracx/specfun.hpp"

using namespace fracx;

namespace {

GridFunction sampled(double lo, double hi, int m, double (*f)(double)) {
  GridFunction g;
  for (int i = 0; i <= m; ++i) {
    double x = lo + (hi - lo) * i / m;
    g.abscissae.push_back(x);
    g.values.push_back(f(x));
  }
  return g;
}

}  // namespace

TEST_CASE("progressive integral exact on linear data") {
  GridFunction f = sampled(0.0, 1.0, 4, [](double) { return 1.0; });
  auto r = frac_integral(FracSide::left_halfaxis, 0.5, f, {0.25, 1.0});
  CHECK(r.values[0] ==
        doctest::Approx(std::sqrt(0.25) / std::tgamma(1.5)).epsilon(1e-13));
  CHECK(r.values[1] == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
}

TEST_CASE("monomial rule settled by quadrature") {
  // (I^a t^b)(x) = Gamma(b+1)/Gamma(a+b+1) x^{a+b}
  GridFunction f = sampled(0.0, 1.0, 4000, [](double t) { return t * t; });
  auto r = frac_integral(FracSide::left_halfaxis, 0.5, f, {1.0});
  CHECK(r.values[0] ==
        doctest::Approx(std::tgamma(3.0) / std::tgamma(3.5)).epsilon(1e-6));
}

TEST_CASE("regressive integral with power tail") {
  GridFunction f;
  const int m = 3000;
  for (int i = 0; i <= m; ++i) {
    double t = std::pow(10.0, 2.0 * i / m);
    f.abscissae.push_back(t);
    f.values.push_back(1.0 / (t * t));
  }
  f.tail = {TailKind::power, -2.0, f.values.back()};
  auto r = frac_integral(FracSide::right_halfaxis, 0.5, f, {1.0, 2.0});
  // (I_-^a t^-b)(x) = Gamma(b-a)/Gamma(b) x^{a-b}
  double c = std::tgamma(1.5) / std::tgamma(2.0);
  CHECK(r.values[0] == doctest::Approx(c).epsilon(1e-4));
  CHECK(r.values[1] == doctest::Approx(c * std::pow(2.0, -1.5)).epsilon(1e-4));
}

TEST_CASE("alpha one is the running integral") {
  GridFunction f = sampled(0.0, 2.0, 2000, [](double t) { return t; });
  auto r = frac_integral(FracSide::left_halfaxis, 1.0, f, f.abscissae);
  CHECK(r.values.back() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("missing tail rejected") {
  GridFunction f = sampled(1.0, 2.0, 4, [](double t) { return 1.0 / t; });
  CHECK_THROWS_AS(frac_integral(FracSide::right_halfaxis, 0.5, f, {1.5}),
                  MissingTail);
}

TEST_CASE("remainder bound contract") {
  HazardEnvelope env{1.0, 0.5};  // weibull exponent rho - alpha with rho = 1
  CHECK(remainder_bound(HazardKind::weibull_type, 0.5, env, 1.0, 1) ==
        doctest::Approx(std::tgamma(1.5) / std::tgamma(2.0)).epsilon(1e-12));
  CHECK(remainder_bound(HazardKind::weibull_type, 0.5, env, 1.0, 0) == 1.0);
  double prev = remainder_bound(HazardKind::weibull_type, 0.5, env, 0.8, 1);
  for (long k = 2; k <= 20; ++k) {
    double b = remainder_bound(HazardKind::weibull_type, 0.5, env, 0.8, k);
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("certified radius orientation") {
  HazardEnvelope wenv{1.0, 0.5};
  double r1 = certified_radius(HazardKind::weibull_type, 0.5, wenv, 1);
  double r5 = certified_radius(HazardKind::weibull_type, 0.5, wenv, 5);
  CHECK(r1 > 0.0);
  CHECK(r5 > r1);  // deeper truncation certifies farther out
  HazardEnvelope fenv{1.0, -1.5};
  double f1 = certified_radius(HazardKind::frechet_type, 0.5, fenv, 1);
  double f5 = certified_radius(HazardKind::frechet_type, 0.5, fenv, 5);
  CHECK(f5 < f1);  // lower limit moves toward the origin
}

TEST_CASE("series solve matches closed forms") {
  HazardSpec h;
  h.evaluator = [](double x) { return std::sqrt(x); };
  h.envelope = {1.0, 0.5};
  std::vector<double> grid;
  const int m = 800;
  for (int i = 0; i <= m; ++i)
    grid.push_back(std::pow(double(i) / m, 2.0));
  auto s = series_solve(HazardKind::weibull_type, 0.5, h, grid, 30);
  SeriesEvaluator ref(ks_coeffs(KSParams(0.5, 2.0, 1.0)));
  CHECK(s.solution.values.back() ==
        doctest::Approx(ref.eval(-1.0, {}).value).epsilon(1e-5));
  CHECK(s.certified_limit > 1.0);
}

TEST_CASE("series solve envelope spot check") {
  HazardSpec h;
  h.evaluator = [](double x) { return 2.0 * std::sqrt(x); };  // breaks c = 1
  h.envelope = {1.0, 0.5};
  std::vector<double> grid{0.0, 0.5, 1.0};
  CHECK_THROWS_AS(series_solve(HazardKind::weibull_type, 0.5, h, grid, 5),
                  EnvelopeViolated);
}

TEST_CASE("power hazard fast path equals dist") {
  CHECK(power_hazard_solve(HazardKind::weibull_type, 0.5, 1.0, 1.0, 1.3).value ==
        sf(make_dist(DistKind::fweibull, 0.5, 1.0, 1.0), 1.3).value);
  CHECK(power_hazard_solve(HazardKind::frechet_type, 0.5, 1.0, 1.0, 1.3).value ==
        cdf(make_dist(DistKind::ffrechet, 0.5, 1.0, 1.0), 1.3).value);
  CHECK(power_hazard_solve(HazardKind::gumbel_type, 0.5, 1.0, 1.0, -0.4).value ==
        sf(make_dist(DistKind::fgumbel, 0.5, 1.0), -0.4).value);
}
