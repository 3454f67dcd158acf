#pragma once

#include <cstdlib>
#include <string>

namespace fracx {

// Budgets for certified series evaluation.
struct EvalConfig {
  double target_rel_error = 1e-13;
  long max_terms = 1000000;
  long max_precision_bits = 65536;

  // Applies the FRACX_PRECISION_BITS environment cap, if set.
  EvalConfig with_env_cap() const {
    EvalConfig c = *this;
    if (const char* s = std::getenv("FRACX_PRECISION_BITS")) {
      long cap = std::strtol(s, nullptr, 10);
      if (cap > 0 && cap < c.max_precision_bits) c.max_precision_bits = cap;
    }
    return c;
  }
};

// A computed value together with a certified absolute error bound and the
// budgets actually spent.
struct EvalResult {
  double value = 0;
  double abs_error_bound = 0;
  long terms_used = 0;
  long precision_bits_used = 0;
};

}  // namespace fracx
