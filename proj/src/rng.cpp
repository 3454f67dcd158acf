#include "fracx/rng.hpp"

#include <cmath>

#include "fracx/errors.hpp"

namespace fracx {

Rng::Rng(RngState s) {
  std::seed_seq seq{static_cast<std::uint32_t>(s.seed),
                    static_cast<std::uint32_t>(s.seed >> 32),
                    static_cast<std::uint32_t>(s.stream),
                    static_cast<std::uint32_t>(s.stream >> 32)};
  eng_.seed(seq);
}

double Rng::uniform() {
  // 53 bits, offset by half an ulp so 0 and 1 are unreachable
  return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma: shape must be positive");
  if (shape < 1.0) {
    // boost: Gamma(k) = Gamma(k+1) * U^{1/k}
    return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double a, double b) {
  double x = gamma(a);
  double y = gamma(b);
  return x / (x + y);
}

}  // namespace fracx
