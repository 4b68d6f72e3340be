#pragma once

#include <vector>

namespace dunkl::specfun {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(nodes[k]);
    return sum;
  }
};

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
/// Exact for polynomials of degree 2n-1. Golub-Welsch.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/// n-point generalized Gauss-Laguerre rule for x^alpha e^{-x} on [0, inf).
QuadratureRule gauss_laguerre(int n, double alpha);

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Double-exponential (tanh-sinh) rule on [a, b] with step `step` and
/// 2*half_count+1 abscissae. Tolerates integrable endpoint singularities;
/// nodes never touch the endpoints.
QuadratureRule tanh_sinh(double a, double b, double step = 1.0 / 16.0, int half_count = 64);

}  // namespace dunkl::specfun
