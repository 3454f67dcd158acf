#include "fracx/fracsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracx/errors.hpp"
#include "fracx/quadrature.hpp"

namespace fracx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log Gamma(a, z) (upper incomplete, unregularized), z >= 0.
double log_upper_gamma(double a, double z) {
  if (z == 0.0) return std::lgamma(a);
  if (z < a + 1.0) {
    double q = 1.0 - reg_lower_gamma(a, z);
    if (q <= 0.0) return -kInf;
    return std::lgamma(a) + std::log(q);
  }
  // continued fraction, evaluated directly so tiny tails keep their logs
  double b = z + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return a * std::log(z) - z + std::log(h);
}

// (p^al - q^al)/al for p >= q >= 0, stable when p - q << p.
double pow_diff(double p, double q, double al) {
  if (q == 0.0) return std::pow(p, al) / al;
  return -std::pow(p, al) * std::expm1(al * std::log(q / p)) / al;
}

// int_a^b (x-u)^{al-1} (fa + s(u-a)) du for a < b <= x, s the linear slope.
double left_cell(double al, double x, double a, double b, double fa,
                 double fb) {
  const double da = x - a, db = x - b;
  const double m0 = pow_diff(da, db, al);
  const double m1 = x * m0 - pow_diff(da, db, al + 1.0);  // int u-moment
  const double s = (fb - fa) / (b - a);
  return fa * m0 + s * (m1 - a * m0);
}

// int_a^b (u-x)^{al-1} (fa + s(u-a)) du for x <= a < b.
double right_cell(double al, double x, double a, double b, double fa,
                  double fb) {
  const double va = a - x, vb = b - x;
  const double m0 = pow_diff(vb, va, al);
  const double m1 = x * m0 + pow_diff(vb, va, al + 1.0);
  const double s = (fb - fa) / (b - a);
  return fa * m0 + s * (m1 - a * m0);
}

double lerp(const std::vector<double>& xs, const std::vector<double>& vs,
            std::size_t i, double x) {
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return vs[i] + t * (vs[i + 1] - vs[i]);
}

// int_L^inf (u-x)^{al-1} v e^{e(u-U)} du with L = max(U, x), e < 0.
double exp_tail(double al, double x, double U, double e, double v) {
  if (v == 0.0) return 0.0;
  if (!(e < 0.0))
    throw DomainError("frac_integral: exponential tail must decay");
  const double mu = -e;
  const double L = std::max(U, x);
  const double z = mu * (L - x);
  const double lg = std::log(std::abs(v)) + e * (L - U) + z -
                    al * std::log(mu) + log_upper_gamma(al, z);
  return (v > 0 ? 1.0 : -1.0) * std::exp(lg);
}

void check_grid(const GridFunction& f) {
  if (f.abscissae.size() != f.values.size() || f.abscissae.size() < 2)
    throw DomainError("frac_integral: grid needs two or more matched nodes");
  for (std::size_t i = 1; i < f.abscissae.size(); ++i)
    if (!(f.abscissae[i] > f.abscissae[i - 1]))
      throw DomainError("frac_integral: abscissae must be strictly increasing");
}

}  // namespace

GridFunction frac_integral(FracSide side, double alpha, const GridFunction& f,
                           const std::vector<double>& x_eval) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("frac_integral: alpha must lie in (0,1]");
  check_grid(f);

  if (side == FracSide::left_line) {
    // reflect onto the regressive half-axis form
    if (f.tail.kind == TailKind::none)
      throw MissingTail("frac_integral: left_line needs a tail descriptor");
    if (f.tail.kind != TailKind::exponential)
      throw DomainError("frac_integral: left_line accepts only exponential tails");
    if (!(f.tail.exponent > 0.0))
      throw DomainError("frac_integral: left_line tail must decay towards -inf");
    GridFunction g;
    const std::size_t m = f.abscissae.size();
    g.abscissae.resize(m);
    g.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      g.abscissae[i] = -f.abscissae[m - 1 - i];
      g.values[i] = f.values[m - 1 - i];
    }
    g.tail = {TailKind::exponential, -f.tail.exponent, f.tail.scale};
    std::vector<double> xr(x_eval.size());
    for (std::size_t i = 0; i < x_eval.size(); ++i)
      xr[i] = -x_eval[x_eval.size() - 1 - i];
    GridFunction r = frac_integral(FracSide::right_halfaxis, alpha, g, xr);
    GridFunction out;
    out.abscissae = x_eval;
    out.values.resize(x_eval.size());
    for (std::size_t i = 0; i < x_eval.size(); ++i)
      out.values[i] = r.values[x_eval.size() - 1 - i];
    return out;
  }

  const auto& xs = f.abscissae;
  const auto& vs = f.values;
  const double inv_gamma = std::exp(-std::lgamma(alpha));
  GridFunction out;
  out.abscissae = x_eval;

  // alpha = 1 on the grid itself is a plain running integral; prefix sums
  // make dense classical-limit grids affordable
  if (alpha == 1.0 && x_eval == xs) {
    const std::size_t m = xs.size();
    out.values.assign(m, 0.0);
    if (side == FracSide::left_halfaxis) {
      if (!(xs.front() >= 0.0))
        throw DomainError("frac_integral: left_halfaxis needs x >= 0");
      for (std::size_t i = 1; i < m; ++i)
        out.values[i] = out.values[i - 1] +
                        0.5 * (xs[i] - xs[i - 1]) * (vs[i] + vs[i - 1]);
    } else {
      if (f.tail.kind == TailKind::none)
        throw MissingTail("frac_integral: right_halfaxis needs a tail descriptor");
      double tail = 0;
      const double e = f.tail.exponent, v = f.tail.scale, U = xs.back();
      if (f.tail.kind == TailKind::exponential) {
        if (!(e < 0.0))
          throw DomainError("frac_integral: exponential tail must decay");
        tail = v / -e;
      } else if (v != 0.0) {
        if (!(1.0 + e < 0.0))
          throw DomainError(
              "frac_integral: power tail too heavy, need exponent < -alpha");
        if (!(U > 0.0))
          throw DomainError(
              "frac_integral: power tail needs a positive half-axis grid");
        tail = v * U / (-e - 1.0);
      }
      out.values[m - 1] = tail;
      for (std::size_t i = m - 1; i-- > 0;)
        out.values[i] = out.values[i + 1] +
                        0.5 * (xs[i + 1] - xs[i]) * (vs[i] + vs[i + 1]);
    }
    return out;
  }

  out.values.reserve(x_eval.size());

  for (double x : x_eval) {
    double acc = 0;
    if (side == FracSide::left_halfaxis) {
      if (!(x >= 0.0))
        throw DomainError("frac_integral: left_halfaxis needs x >= 0");
      if (x > xs.back())
        throw DomainError("frac_integral: x beyond the grid");
      // the stretch [0, xs.front()) carries no grid data and contributes 0
      for (std::size_t i = 0; i + 1 < xs.size() && xs[i] < x; ++i) {
        const double b = std::min(xs[i + 1], x);
        const double fb = b == xs[i + 1] ? vs[i + 1] : lerp(xs, vs, i, b);
        acc += left_cell(alpha, x, xs[i], b, vs[i], fb);
      }
    } else {  // right_halfaxis
      if (f.tail.kind == TailKind::none)
        throw MissingTail("frac_integral: right_halfaxis needs a tail descriptor");
      if (x < xs.front())
        throw DomainError("frac_integral: x below the grid");
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (xs[i + 1] <= x) continue;
        const double a = std::max(xs[i], x);
        const double fa = a == xs[i] ? vs[i] : lerp(xs, vs, i, a);
        acc += right_cell(alpha, x, a, xs[i + 1], fa, vs[i + 1]);
      }
      const double U = xs.back();
      const double e = f.tail.exponent;
      const double v = f.tail.scale;
      if (f.tail.kind == TailKind::exponential) {
        acc += exp_tail(alpha, x, U, e, v);
      } else if (v != 0.0) {
        if (!(alpha + e < 0.0))
          throw DomainError(
              "frac_integral: power tail too heavy, need exponent < -alpha");
        if (!(U > 0.0))
          throw DomainError(
              "frac_integral: power tail needs a positive half-axis grid");
        // substituting u = x/s turns the tail into an incomplete Beta piece:
        // v U^{-e} x^{alpha+e} B(-alpha-e, alpha) I_{min(1, x/U)}(-alpha-e, alpha)
        const double ap = -alpha - e;
        const double lbeta = std::lgamma(ap) + std::lgamma(alpha) -
                             std::lgamma(ap + alpha);
        if (x == 0.0) {
          acc += v * std::pow(U, alpha) / ap;
        } else {
          acc += v * std::exp(lbeta + alpha * std::log(x) +
                              e * std::log(x / U)) *
                 reg_inc_beta(ap, alpha, std::min(1.0, x / U));
        }
      }
    }
    out.values.push_back(acc * inv_gamma);
  }
  return out;
}

double remainder_bound(HazardKind kind, double alpha, const HazardEnvelope& env,
                       double x, long n) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("remainder_bound: alpha must lie in (0,1]");
  if (!(env.c > 0.0)) throw DomainError("remainder_bound: envelope c must be positive");
  if (n < 0) throw DomainError("remainder_bound: n must be nonnegative");
  if (n == 0) return 1.0;
  double lg = n * std::log(env.c);
  switch (kind) {
    case HazardKind::weibull_type: {
      const double rho = env.exponent + alpha;
      if (!(rho > 0.0))
        throw DomainError("remainder_bound: need exponent > -alpha");
      if (!(x >= 0.0)) throw DomainError("remainder_bound: x must be >= 0");
      if (x == 0.0) return 0.0;
      for (long k = 1; k <= n; ++k)
        lg += std::lgamma(1.0 - alpha + k * rho) - std::lgamma(1.0 + k * rho);
      lg += n * rho * std::log(x);
      break;
    }
    case HazardKind::frechet_type: {
      const double rho = -env.exponent - alpha;
      if (!(rho > 0.0))
        throw DomainError("remainder_bound: need exponent < -alpha");
      if (!(x > 0.0)) throw DomainError("remainder_bound: x must be positive");
      for (long k = 1; k <= n; ++k)
        lg += std::lgamma(k * rho) - std::lgamma(alpha + k * rho);
      lg -= n * rho * std::log(x);
      break;
    }
    case HazardKind::gumbel_type: {
      const double lam = env.exponent;
      if (!(lam > 0.0))
        throw DomainError("remainder_bound: need a positive decay rate");
      lg += n * lam * x - n * alpha * std::log(lam) -
            alpha * std::lgamma(n + 1.0);
      break;
    }
  }
  return std::exp(lg);
}

double certified_radius(HazardKind kind, double alpha,
                        const HazardEnvelope& env, long n) {
  if (n < 1) throw DomainError("certified_radius: n must be >= 1");
  if (!(env.c > 0.0)) throw DomainError("certified_radius: envelope c must be positive");
  double s = n * std::log(env.c);
  switch (kind) {
    case HazardKind::weibull_type: {
      const double rho = env.exponent + alpha;
      if (!(rho > 0.0)) throw DomainError("certified_radius: need exponent > -alpha");
      for (long k = 1; k <= n; ++k)
        s += std::lgamma(1.0 - alpha + k * rho) - std::lgamma(1.0 + k * rho);
      return std::exp(-s / (n * rho));
    }
    case HazardKind::frechet_type: {
      const double rho = -env.exponent - alpha;
      if (!(rho > 0.0)) throw DomainError("certified_radius: need exponent < -alpha");
      for (long k = 1; k <= n; ++k)
        s += std::lgamma(k * rho) - std::lgamma(alpha + k * rho);
      return std::exp(s / (n * rho));
    }
    case HazardKind::gumbel_type: {
      const double lam = env.exponent;
      if (!(lam > 0.0)) throw DomainError("certified_radius: need a positive decay rate");
      return (alpha * std::lgamma(n + 1.0) / n + alpha * std::log(lam) -
              std::log(env.c)) /
             lam;
    }
  }
  throw DomainError("certified_radius: unknown kind");
}

namespace {

void spot_check_envelope(HazardKind kind, const HazardSpec& h,
                         const std::vector<double>& grid) {
  const double c = h.envelope.c;
  const double e = h.envelope.exponent;
  const double slack = 1.0 + 1e-9;
  auto fail = [](double t, double hv, double bound) {
    throw EnvelopeViolated("series_solve: hazard exceeds its envelope, h(" +
                           std::to_string(t) + ") = " + std::to_string(hv) +
                           " > " + std::to_string(bound));
  };
  if (kind == HazardKind::gumbel_type) {
    // limit region is the left end; the envelope must hold up the whole grid
    const double lo = grid.front(), hi = grid.back();
    for (int i = 0; i < 20; ++i) {
      const double t = lo + (hi - lo) * i / 19.0;
      const double bound = c * std::exp(e * t);
      const double hv = h.evaluator(t);
      if (!(hv <= bound * slack)) fail(t, hv, bound);
    }
    return;
  }
  double lo, hi;
  if (kind == HazardKind::weibull_type) {
    hi = grid.back();
    lo = hi * 1e-6;
  } else {
    lo = grid.front();
    hi = grid.back() * 1e3;
  }
  for (int i = 0; i < 20; ++i) {
    const double t = lo * std::pow(hi / lo, i / 19.0);
    const double bound = c * std::pow(t, e);
    const double hv = h.evaluator(t);
    if (!(hv <= bound * slack)) fail(t, hv, bound);
  }
}

}  // namespace

SeriesSolution series_solve(HazardKind kind, double alpha, const HazardSpec& h,
                            const std::vector<double>& grid, long n_terms) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("series_solve: alpha must lie in (0,1]");
  if (n_terms < 1) throw DomainError("series_solve: n_terms must be >= 1");
  if (grid.size() < 2) throw DomainError("series_solve: grid needs >= 2 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw DomainError("series_solve: grid must be strictly increasing");
  if (!h.evaluator) throw DomainError("series_solve: missing hazard evaluator");
  if (kind == HazardKind::weibull_type && grid.front() != 0.0)
    throw DomainError("series_solve: weibull_type grid must start at 0");
  if (kind != HazardKind::gumbel_type && !(grid.front() >= 0.0) )
    throw DomainError("series_solve: half-axis grid must be nonnegative");
  if (kind == HazardKind::frechet_type && !(grid.front() > 0.0))
    throw DomainError("series_solve: frechet_type grid must be positive");
  spot_check_envelope(kind, h, grid);

  const std::size_t m = grid.size();
  const bool reflect = kind == HazardKind::gumbel_type;

  // gumbel_type reduces to the regressive engine on the reflected axis
  std::vector<double> xs(m), hv(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = reflect ? -grid[m - 1 - i] : grid[i];
    const double t = reflect ? -xs[i] : xs[i];
    hv[i] = h.evaluator(t);
    if (!std::isfinite(hv[i]) || hv[i] < 0.0)
      throw DomainError("series_solve: hazard must be finite and nonnegative on the grid");
  }

  const FracSide side = kind == HazardKind::weibull_type
                            ? FracSide::left_halfaxis
                            : FracSide::right_halfaxis;
  const double rho = kind == HazardKind::weibull_type
                         ? h.envelope.exponent + alpha
                         : -h.envelope.exponent - alpha;

  std::vector<double> f(m, 1.0), sol(m, 1.0), g(m);
  double sign = -1.0;
  for (long n = 1; n < n_terms; ++n) {
    for (std::size_t i = 0; i < m; ++i) g[i] = hv[i] * f[i];
    GridFunction gf;
    gf.abscissae = xs;
    gf.values = g;
    if (kind == HazardKind::frechet_type)
      gf.tail = {TailKind::power, h.envelope.exponent - rho * (n - 1),
                 g.back()};
    else if (kind == HazardKind::gumbel_type)
      gf.tail = {TailKind::exponential, -n * h.envelope.exponent, g.back()};
    f = frac_integral(side, alpha, gf, xs).values;
    for (std::size_t i = 0; i < m; ++i) sol[i] += sign * f[i];
    sign = -sign;
  }

  SeriesSolution out;
  out.solution.abscissae = grid;
  out.solution.values.resize(m);
  out.remainder.abscissae = grid;
  out.remainder.values.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.solution.values[i] = reflect ? sol[m - 1 - i] : sol[i];
    out.remainder.values[i] =
        remainder_bound(kind, alpha, h.envelope, grid[i], n_terms);
  }
  out.certified_limit = certified_radius(kind, alpha, h.envelope, n_terms);
  return out;
}

EvalResult power_hazard_solve(HazardKind kind, double alpha, double lambda,
                              double rho, double x, const EvalConfig& cfg) {
  switch (kind) {
    case HazardKind::weibull_type:
      return sf(make_dist(DistKind::fweibull, alpha, lambda, rho), x, cfg);
    case HazardKind::frechet_type:
      return cdf(make_dist(DistKind::ffrechet, alpha, lambda, rho), x, cfg);
    case HazardKind::gumbel_type:
      return sf(make_dist(DistKind::fgumbel, alpha, lambda), x, cfg);
  }
  throw DomainError("power_hazard_solve: unknown kind");
}

}  // namespace fracx
