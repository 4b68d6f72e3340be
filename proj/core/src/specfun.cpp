#include "dunkl/specfun.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl::specfun {
namespace {

void check_degree(int n, const char* who) {
  if (n < 0 || n > kMaxDegree) {
    throw DomainError(std::string(who) + ": degree " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxDegree) + "]");
  }
}

// Plain recurrence, no argument checks. Degree -1 yields 0.
double laguerre_value(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double jacobi_value(int n, double a, double b, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 0.5 * ((a + b + 2.0) * x + (a - b));
  const double ab = a + b;
  const double a2b2 = a * a - b * b;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    const double lead = 2.0 * (k + 1.0) * (k + ab + 1.0) * c;
    const double mid = (c + 1.0) * ((c + 2.0) * c * x + a2b2);
    const double tail = 2.0 * (k + a) * (k + b) * (c + 2.0);
    const double next = (mid * curr - tail * prev) / lead;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  int sign = 1;
  return ::lgamma_r(x, &sign);
}

PolynomialEval laguerre(int n, double alpha, double x) {
  check_degree(n, "laguerre");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1, got " + std::to_string(alpha));
  if (x < 0.0) throw DomainError("laguerre: argument must be non-negative");
  return {laguerre_value(n, alpha, x), -laguerre_value(n - 1, alpha + 1.0, x)};
}

PolynomialEval jacobi(int n, double a, double b, double x) {
  check_degree(n, "jacobi");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("jacobi: parameters must exceed -1, got (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  }
  if (std::abs(x) > 1.0) throw DomainError("jacobi: argument outside [-1, 1]");
  const double dfac = 0.5 * (n + a + b + 1.0);
  return {jacobi_value(n, a, b, x), n == 0 ? 0.0 : dfac * jacobi_value(n - 1, a + 1.0, b + 1.0, x)};
}

double jacobi_second_derivative(int n, double a, double b, double x) {
  // Two applications of the derivative identity.
  if (n < 2) {
    jacobi(n, a, b, x);  // argument validation
    return 0.0;
  }
  const auto first = jacobi(n - 1, a + 1.0, b + 1.0, x);
  return 0.5 * (n + a + b + 1.0) * first.derivative;
}

PolynomialEval hermite(int n, double x) {
  check_degree(n, "hermite");
  double prev = 1.0;
  if (n == 0) return {1.0, 0.0};
  double curr = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * k * prev;
    prev = curr;
    curr = next;
  }
  return {curr, 2.0 * n * prev};
}

}  // namespace dunkl::specfun
