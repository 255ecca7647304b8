#pragma once

namespace emn {

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
// Series expansion for x < a + 1, modified Lentz continued fraction
// otherwise. Converges to 1e-10 absolute within 300 iterations or
// throws NumericFailure.
double gamma_q(double a, double x);

// Lower counterpart, P(a, x) = 1 - Q(a, x).
double gamma_p(double a, double x);

// Chi-squared survival function: probability that a chi-squared variable
// with `dof` degrees of freedom exceeds x.
double chi_squared_sf(double x, unsigned dof);

}  // namespace emn
