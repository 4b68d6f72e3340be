#pragma once

// Special-function kernels used by the closed-form eigenfunctions.
// Everything here is pure and reentrant.

namespace dunkl::specfun {

/// Polynomial value together with its derivative in the polynomial argument.
struct PolynomialEval {
  double value;
  double derivative;
};

/// Highest degree accepted by the recurrences.
inline constexpr int kMaxDegree = 200;

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Generalized Laguerre polynomial L_n^alpha(x), alpha > -1, x >= 0.
///
/// Upward three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},
/// derivative from d/dx L_n^alpha = -L_{n-1}^{alpha+1}.
PolynomialEval laguerre(int n, double alpha, double x);

/// Jacobi polynomial P_n^{(a,b)}(x) on [-1, 1], a, b > -1.
///
/// Derivative from d/dx P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
PolynomialEval jacobi(int n, double a, double b, double x);

/// Second derivative of P_n^{(a,b)} at x.
double jacobi_second_derivative(int n, double a, double b, double x);

/// Physicists' Hermite polynomial H_n(x) with derivative 2n H_{n-1}(x).
PolynomialEval hermite(int n, double x);

}  // namespace dunkl::specfun
