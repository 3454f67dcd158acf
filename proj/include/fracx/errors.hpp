#pragma once

#include <stdexcept>
#include <string>

namespace fracx {

// Invalid parameter or argument outside the mathematical domain.
// CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Certified evaluation could not meet its error target within the term
// and precision budgets.  CLI maps this to exit code 3.
class NonConvergent : public std::runtime_error {
 public:
  NonConvergent(const std::string& what, long terms, long bits)
      : std::runtime_error(what), terms_used(terms), precision_bits_used(bits) {}
  long terms_used;
  long precision_bits_used;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public std::runtime_error {
 public:
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// The four-parameter Pochhammer ratio does not define a probability law.
class NotARandomVariable : public DomainError {
 public:
  explicit NotARandomVariable(const std::string& what) : DomainError(what) {}
};

// A fractional integral over an unbounded side was requested without an
// analytic tail descriptor.
class MissingTail : public DomainError {
 public:
  explicit MissingTail(const std::string& what) : DomainError(what) {}
};

// A hazard envelope certificate failed its spot checks.
class EnvelopeViolated : public std::runtime_error {
 public:
  explicit EnvelopeViolated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracx
