#pragma once

#include <functional>

namespace fracx {

// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b] to absolute
// tolerance tol.  Bisects until each segment's Kronrod-Gauss discrepancy is
// within its share of the budget.  Throws QuadratureFailure past depth 48.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

// Regularized lower incomplete gamma P(a, x), continued-fraction / series
// split at x = a + 1.
double reg_lower_gamma(double a, double x);

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
double reg_inc_beta(double a, double b, double x);

}  // namespace fracx
