#pragma once

// Scalar special functions needed by the measure / stationary / diagnostic
// code. All are classical algorithms (asymptotic series plus downward
// recurrences, Lentz continued fractions); accuracy targets are stated per
// function and exercised in the unit tests.

namespace bsieve {

// Euler-Mascheroni constant to 30 significant digits.
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// psi(x), x > 0. Absolute error below ~1e-14 over the tested range.
double digamma(double x);

// psi'(x), x > 0.
double trigamma(double x);

// Regularized incomplete beta I_x(a,b), 0 <= x <= 1, a,b > 0.
double ibeta(double a, double b, double x);

// Regularized upper incomplete gamma Q(a,x) = Gamma(a,x)/Gamma(a).
double igamma_q(double a, double x);

// Exponential integral E1(z) = int_z^inf e^{-t}/t dt, z > 0.
// Series below z = 1.5, Lentz continued fraction above; ~1e-14 relative.
double expint_e1(double z);

// Standard normal cdf.
double normal_cdf(double x);

// Kolmogorov distribution survival: P(sup|B| > t) = 2 sum (-1)^{k-1} e^{-2k^2t^2}.
double kolmogorov_survival(double t);

// Chi-square survival P(X > x) with k degrees of freedom.
double chi2_survival(double x, double k);

}  // namespace bsieve
