#pragma once

#include <string>
#include <vector>

#include "fracx/mc.hpp"

namespace fracx {

// Named check suites shared by the CLI and the acceptance harness:
//   bounds       hyperbolic bracket grids for all five families
//   barnes       double-Gamma functional equations and closed forms
//   moments      MC functional means / second moments vs the exact oracles,
//                plus the stable-sampler Laplace transform self-check
//   identities   distributional identities (KS tests), special-value and
//                monotonicity checks
//   solver       fractional-integral oracles and operator-series vs closed
//                forms
//   asymptotics  series tails at moderate arguments vs leading constants
struct SuiteConfig {
  bool quick = false;        // reduced grids and sample sizes
  RngState rng{20260824, 0};
};

// suite is one of the six names above or "all".  Throws DomainError on an
// unknown name.  Every report is deterministic for a fixed SuiteConfig.
std::vector<CheckReport> verify_suite(const std::string& suite,
                                      const SuiteConfig& cfg = {});

const std::vector<std::string>& verify_suite_names();

}  // namespace fracx
