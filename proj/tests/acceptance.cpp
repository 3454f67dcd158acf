// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures.  Sample sizes and grids follow the check plan in README.md; the
// whole run fits a single core in well under half an hour.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fracx/dist.hpp"
#include "fracx/mc.hpp"
#include "fracx/specfun.hpp"
#include "fracx/verify.hpp"

using namespace fracx;

namespace {

int g_failures = 0;

void line(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d  %s  %s\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct SuiteRun {
  std::vector<CheckReport> reports;
  double seconds = 0;
};

SuiteRun run_suite(const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteRun r;
  r.reports = verify_suite(name);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

// all reports whose name contains any of the fragments pass, and at least
// one such report exists
bool subset_pass(const SuiteRun& run, const std::vector<std::string>& frags,
                 int* count = nullptr) {
  int seen = 0;
  bool ok = true;
  for (const auto& rep : run.reports) {
    for (const auto& f : frags) {
      if (rep.name.find(f) != std::string::npos) {
        ++seen;
        ok = ok && rep.pass;
        break;
      }
    }
  }
  if (count) *count = seen;
  return ok && seen > 0;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// ---------------------------------------------------------------- crit 4 --

// empirical sf at 10 analytic quantiles, binomial 4-SE bands
int quantile_hits(const DistDescriptor& d, const std::vector<double>& draws) {
  int hits = 0;
  const double n = static_cast<double>(draws.size());
  for (int i = 0; i < 10; ++i) {
    double p = (i + 0.5) / 10.0;
    double x = quantile(d, p);
    long above = 0;
    for (double v : draws)
      if (v > x) ++above;
    double emp = static_cast<double>(above) / n;
    double se = std::sqrt(p * (1.0 - p) / n);
    if (std::abs(emp - (1.0 - p)) <= 4.0 * se) ++hits;
  }
  return hits;
}

std::vector<double> functional_draws(FunctionalKind kind, double alpha,
                                     double rho, SampleMethod method,
                                     const PathConfig& pc,
                                     const ProductConfig& cc, RngState st,
                                     long n) {
  Rng rng(st);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    out.push_back(sample_functional(kind, alpha, rho, method, pc, cc, rng));
  return out;
}

// -------------------------------------------------------------- crit 11 --

// |sample mean of f - target| in units of the sample SE
double mean_gap_se(const std::vector<double>& xs, double (*f)(double, double),
                   double s, double target) {
  double sum = 0, sq = 0;
  for (double x : xs) {
    double v = f(x, s);
    sum += v;
    sq += v * v;
  }
  const double n = static_cast<double>(xs.size());
  sum /= n;
  sq /= n;
  double se = std::sqrt(std::max(sq - sum * sum, 0.0) / n);
  return std::abs(sum - target) / se;
}

double pow_of(double x, double s) { return std::pow(x, s); }
double exp_of(double x, double s) { return std::exp(s * x); }

}  // namespace

int main() {
  const std::uint64_t seed = 20260824;

  // 1. hyperbolic bound brackets on the prescribed parameter grids
  {
    SuiteRun r = run_suite("bounds");
    bool ok = subset_pass(r, {"bounds."});
    line(1, ok && r.seconds < 120.0,
         "bound brackets on the five family grids, " + secs(r.seconds) +
             " (limit 120 s)");
  }

  // 2. double Gamma functional equations and the Gamma-ratio product
  {
    SuiteRun r = run_suite("barnes");
    bool ok = subset_pass(r, {"barnes."});
    line(2, ok && r.seconds < 30.0,
         "double Gamma identities to 1e-8, " + secs(r.seconds) +
             " (limit 30 s)");
  }

  // 3. functional means and the Gumbel second moment vs exact oracles
  {
    SuiteRun r = run_suite("moments");
    bool ok = subset_pass(
        r, {"weibull_mean", "frechet_mean", "gumbel_mean", "gumbel_second"});
    line(3, ok && r.seconds < 120.0,
         "moment oracles vs MC at n = 1e5, " + secs(r.seconds) +
             " (limit 120 s)");
  }

  // 4. sampler vs analytic quantiles, and path vs product in law
  // (the three 1e5-draw batches are reused by criterion 11)
  auto dw = make_dist(DistKind::fweibull, 0.5, 1.0, 1.0);
  auto df = make_dist(DistKind::ffrechet, 0.5, 1.0, 1.0);
  auto dg = make_dist(DistKind::fgumbel, 0.5, 1.0);
  SampleBatch bw, bf, bg;
  {
    const long n_sf = 100000, n_ks = 10000;
    ProductConfig cc;
    cc.n_factors = 1024;
    PathConfig pc_gumbel;
    pc_gumbel.step = 5e-3;
    PathConfig pc_fast;
    pc_fast.step = 1e-3;

    bw = sample_dist(dw, n_sf, {seed, 41}, SampleMethod::beta_product, {}, cc);
    bf = sample_dist(df, n_sf, {seed, 42}, SampleMethod::beta_product, {}, cc);
    // gumbel draws by hand: split the recorded Riemann bracket on the
    // functional before mapping, which removes most of the step bias
    {
      Rng rng({seed, 43});
      bg.values.reserve(n_sf);
      for (long i = 0; i < n_sf; ++i) {
        double L = rng.exponential();
        PathStats st;
        double I = sample_functional(FunctionalKind::exp_int, 0.5, 1.0,
                                     SampleMethod::path, pc_gumbel, {}, rng,
                                     &st);
        bg.values.push_back(std::log(L / (I - 0.5 * st.bias)));
      }
    }
    int hw = quantile_hits(dw, bw.values);
    int hf = quantile_hits(df, bf.values);
    int hg = quantile_hits(dg, bg.values);

    ProductConfig cc_ks;
    cc_ks.n_factors = 2048;
    bool ks_ok = true;
    const double thr = ks_threshold(n_ks, n_ks);
    std::uint64_t stream = 50;
    PathConfig pc_exp;
    pc_exp.step = 2.5e-3;
    for (auto kind : {FunctionalKind::weibull_int, FunctionalKind::frechet_int,
                      FunctionalKind::exp_int}) {
      const PathConfig& pc =
          kind == FunctionalKind::exp_int ? pc_exp : pc_fast;
      auto a = functional_draws(kind, 0.5, 1.0, SampleMethod::path, pc, {},
                                {seed, stream++}, n_ks);
      auto b = functional_draws(kind, 0.5, 1.0, SampleMethod::beta_product, {},
                                cc_ks, {seed, stream++}, n_ks);
      ks_ok = ks_ok && ks_two_sample(a, b) <= thr;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "quantile hits %d/%d/%d of 10 (need >= 9), path vs product "
                  "KS %s at 1%%",
                  hw, hf, hg, ks_ok ? "pass" : "fail");
    line(4, hw >= 9 && hf >= 9 && hg >= 9 && ks_ok, buf);
  }

  // 5. tail constants at the 1e-3 quantiles, n = 1e6
  {
    const long n = 1000000;
    ProductConfig cc;
    cc.n_factors = 256;

    // abscissas come from inverting the certified leading asymptotes at mass
    // 1e-3; the direct series is far outside its certifiable range there
    auto dwt = make_dist(DistKind::fweibull, 0.5, 1.0, 1.0);
    AsymptoteSpec up = support_asymptote(dwt, SupportEnd::upper);
    // sf ~ C x^{power+1} / (-power-1), here 1 / (Gamma(0.5) x)
    double xw = std::pow(up.constant / ((-up.power - 1.0) * 1e-3),
                         1.0 / (-up.power - 1.0));
    auto bwt = sample_dist(dwt, n, {seed, 61}, SampleMethod::beta_product, {},
                           cc);
    long above = 0;
    for (double v : bwt.values)
      if (v > xw) ++above;
    double cw = static_cast<double>(above) / n * std::tgamma(0.5) * xw;

    auto df = make_dist(DistKind::ffrechet, 0.5, 1.0, 0.5);
    AsymptoteSpec lo = support_asymptote(df, SupportEnd::lower);
    double xf = std::pow((lo.power + 1.0) * 1e-3 / lo.constant,
                         1.0 / (lo.power + 1.0));
    auto bfr = sample_dist(df, n, {seed, 62}, SampleMethod::beta_product, {},
                           cc);
    long below = 0;
    for (double v : bfr.values)
      if (v <= xf) ++below;
    // lower-end mass from the certified density constant: cdf ~ C x^{p+1}/(p+1)
    double mass = lo.constant * std::pow(xf, lo.power + 1.0) /
                  (lo.power + 1.0);
    double cf = static_cast<double>(below) / n / mass;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "upper-tail constant %.3f in [0.85,1.15], lower-end mass "
                  "ratio %.3f in [0.85,1.15]",
                  cw, cf);
    line(5, cw >= 0.85 && cw <= 1.15 && cf >= 0.85 && cf <= 1.15, buf);
  }

  // 6. series asymptotics at moderate arguments
  {
    SuiteRun r = run_suite("asymptotics");
    bool ok = subset_pass(r, {"asym."});
    line(6, ok && r.seconds < 60.0,
         "deep-argument tails vs leading constants, " + secs(r.seconds) +
             " (limit 60 s)");
  }

  // 7 / 8 / 9 / 10 share the solver and identity suites
  {
    SuiteRun solver = run_suite("solver");
    bool ok7 = subset_pass(solver, {"solver."});
    line(7, ok7,
         "operator series vs closed forms with remainder certificates, " +
             secs(solver.seconds));

    SuiteRun ids = run_suite("identities");
    bool ok8 = subset_pass(
        ids, {"leroy_bessel", "ks_ml_degeneracy", "weibull_ml_collapse"});
    line(8, ok8, "Bessel, one-parameter and rho = alpha special cases");

    bool ok9 =
        subset_pass(ids, {"ks_monotone_in_m", "leroy_monotone_in_alpha"});
    line(9, ok9, "strict ordering in m and non-increase in the order");

    bool ok10 = subset_pass(ids, {"shanbhag_sreehari", "cpy_product",
                                  "exp_factorization", "pareto_endpoints"});
    line(10, ok10,
         "identity-in-law KS suite at 1%, " + secs(ids.seconds));
  }

  // 11. Mellin transforms vs MC power means, one point per family
  {
    PochhammerContext ctx{1.0};
    double worst = 0;
    for (double s : {0.5, -0.5}) {
      worst = std::max(worst,
                       mean_gap_se(bw.values, pow_of, s, mellin(dw, s, ctx)));
      worst = std::max(worst,
                       mean_gap_se(bf.values, pow_of, s, mellin(df, s, ctx)));
      worst = std::max(worst,
                       mean_gap_se(bg.values, exp_of, s, mellin(dg, s, ctx)));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "Mellin / MGF vs MC power means, worst gap %.2f SE (limit 3)",
                  worst);
    line(11, worst <= 3.0, buf);
  }

  // 12. determinism and certification stability
  {
    bool ok = true;
    auto d = make_dist(DistKind::fweibull, 0.5, 1.0, 2.0);
    ProductConfig cc;
    cc.n_factors = 512;
    auto b1 = sample_dist(d, 2000, {seed, 71}, SampleMethod::beta_product, {},
                          cc);
    auto b2 = sample_dist(d, 2000, {seed, 71}, SampleMethod::beta_product, {},
                          cc);
    ok = ok && b1.values == b2.values;

    auto r1 = verify_suite("barnes");
    auto r2 = verify_suite("barnes");
    for (std::size_t i = 0; i < r1.size(); ++i)
      ok = ok && r1[i].statistic == r2[i].statistic;

    // halving target_rel_error must stay within the original certificate
    struct Probe {
      SeriesEvaluator ev;
      double z;
    };
    std::vector<Probe> probes;
    probes.push_back({SeriesEvaluator(ml_coeffs(0.7, 1.0)), -2.5});
    probes.push_back({SeriesEvaluator(ks_coeffs(KSParams(0.5, 2.0, 1.0))),
                      -1.0});
    probes.push_back({SeriesEvaluator(leroy_coeffs(0.5)), -0.9});
    probes.push_back({SeriesEvaluator(ml_coeffs(0.3, 2.0)), 1.7});
    double worst = -1e300;
    for (auto& p : probes) {
      EvalConfig c1;
      EvalConfig c2;
      c2.target_rel_error = c1.target_rel_error / 2.0;
      EvalResult a = p.ev.eval(p.z, c1);
      EvalResult b = p.ev.eval(p.z, c2);
      worst = std::max(worst, std::abs(a.value - b.value) - a.abs_error_bound);
    }
    ok = ok && worst <= 0.0;
    line(12, ok,
         "fixed seeds byte-identical, halved tolerance stays inside the "
         "original certificates");
  }

  std::printf("%s: %d of 12 criteria failed\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures;
}
