#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::specfun {
namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix,
// weights are mu0 times the squared first eigenvector components.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("golub_welsch: eigensolver failed");
  const auto n = diag.size();
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    rule.nodes[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    rule.weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi: parameters must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (c * (c + 2.0));
    double b2;
    if (k == 1) {
      // closed form avoids 0/0 when alpha + beta = -1
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }
  const double log_mu0 = (ab + 1.0) * std::numbers::ln2 + log_gamma(alpha + 1.0) +
                         log_gamma(beta + 1.0) - log_gamma(ab + 2.0);
  return golub_welsch(diag, sub, std::exp(log_mu0));
}

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));
  return golub_welsch(diag, sub, std::exp(log_gamma(alpha + 1.0)));
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  auto rule = gauss_jacobi(n, 0.0, 0.0);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    rule.nodes[k] = mid + half * rule.nodes[k];
    rule.weights[k] *= half;
  }
  return rule;
}

QuadratureRule tanh_sinh(double a, double b, double step, int half_count) {
  if (!(b > a)) throw DomainError("tanh_sinh: empty interval");
  if (!(step > 0.0) || half_count < 1) throw DomainError("tanh_sinh: bad step parameters");
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double half = 0.5 * (b - a);
  QuadratureRule rule;
  for (int k = -half_count; k <= half_count; ++k) {
    const double t = k * step;
    const double u = half_pi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = half * step * half_pi * std::cosh(t) / (cu * cu);
    // distance to the nearer endpoint, 1 - tanh|u| = 2 / (e^{2|u|} + 1), kept exact
    const double gap = half * 2.0 / (std::exp(2.0 * std::abs(u)) + 1.0);
    const double x = (u >= 0.0) ? b - gap : a + gap;
    if (!(x > a && x < b) || w == 0.0) continue;
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace dunkl::specfun
