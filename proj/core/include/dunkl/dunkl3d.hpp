#pragma once

#include <array>
#include <compare>
#include <complex>
#include <string>

#include "dunkl/dynamics.hpp"
#include "dunkl/parity.hpp"

namespace dunkl {

/// Non-negative integer or half-odd-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) noexcept { return HalfInteger(twice); }
  static constexpr HalfInteger integer(int v) noexcept { return HalfInteger(2 * v); }
  /// Throws DomainError unless 2v is an integer.
  static HalfInteger from_double(double v);

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// "2" or "3/2".
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) noexcept : twice_(twice) {}
  int twice_ = 0;
};

/// Isotropic 3D Dunkl oscillator with Wigner parameters (mu1, mu2, mu3) >= 0.
class Dunkl3DModel {
 public:
  explicit Dunkl3DModel(std::array<double, 3> mu, double hbar = 1.0);

  const std::array<double, 3>& mu() const noexcept { return mu_; }
  double hbar() const noexcept { return hbar_; }
  /// delta = mu1 + mu2 + mu3 + 1
  double delta() const noexcept { return mu_[0] + mu_[1] + mu_[2] + 1.0; }

 private:
  std::array<double, 3> mu_;
  double hbar_;
};

/// Quantum numbers (n_r, l, m) and reflection parities (s1, s2, s3).
///
/// m is half-odd when s1 s2 = -1 and integral otherwise; l is integral when
/// s3 = +1 and half-odd when s3 = -1. The Jacobi degrees m - (a1+a2)/2 and
/// l - a3/2, a_i = (1 - s_i)/2, must be non-negative.
struct StateSpec3D {
  int n_r = 0;
  HalfInteger l;
  HalfInteger m;
  std::array<Parity, 3> s{Parity::even, Parity::even, Parity::even};
};

/// Throws DomainError naming the violated ladder rule.
void validate(const StateSpec3D& spec);

/// Degree of the azimuthal Jacobi polynomial, m - (a1 + a2)/2.
int azimuthal_degree(const StateSpec3D& spec);
/// Degree of the polar Jacobi polynomial, l - a3/2.
int polar_degree(const StateSpec3D& spec);

struct SeparationConstants {
  double k_sq;   ///< 4 m (m + mu1 + mu2)
  double q_sq;   ///< 4 (l+m)(l + m + mu1 + mu2 + mu3 + 1/2)
  double sigma;  ///< sqrt(1/4 + delta(delta-1) + q_sq)
};

SeparationConstants separation_constants(const Dunkl3DModel& model, const StateSpec3D& spec);

/// epsilon = hbar (2 n_r + sigma + 1)
double eigenvalue_3d(const Dunkl3DModel& model, const StateSpec3D& spec);

/// Value with first and second derivatives in the angle.
struct AngularEval {
  double value;
  double d1;
  double d2;
};

/// C_phi cos^{a1} sin^{a2} P_{m-(a1+a2)/2}^{(mu2+a2-1/2, mu1+a1-1/2)}(cos 2 phi),
/// normalized on [0, 2 pi) under |sin phi|^{2 mu2} |cos phi|^{2 mu1}.
AngularEval azimuthal_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double phi);

/// C_theta cos^{a3} sin^{2m} P_{l-a3/2}^{(2m+mu1+mu2, mu3+a3-1/2)}(cos 2 theta),
/// normalized on [0, pi] under |sin|^{2 mu1 + 2 mu2} |cos|^{2 mu3} sin.
AngularEval polar_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double theta);

/// C_r kappa^{sigma+1/2} exp(-kappa^2 / (2 hbar)) L_{n_r}^sigma(kappa^2 / hbar),
/// normalized so that the integral of its square over (0, inf) is 1.
double radial_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double kappa);

struct Normalization3D {
  double radial;
  double polar;
  double azimuthal;
};

/// Normalization constants from exact Gauss quadrature, cached per
/// (model, spec). Safe to call concurrently.
Normalization3D normalization_constants_3d(const Dunkl3DModel& model, const StateSpec3D& spec);

/// eta = -(2 n_r + sigma + 1) Theta(t)
double phase_3d(const Dunkl3DModel& model, const StateSpec3D& spec, const dynamics::TrajectoryPoint& at);
double phase_3d(const Dunkl3DModel& model, const StateSpec3D& spec, const dynamics::PinneyTrajectory& trajectory,
                double t);

/// Full time-dependent state
///   e^{i eta} e^{i M rho' r^2 / (2 hbar rho)} rho^{-1/2} r^{-delta} Upsilon(r/rho) Theta(theta) Phi(phi),
/// unit norm under radial_weight * angular_weight at every t. r must be positive.
std::complex<double> wavefunction_3d(const Dunkl3DModel& model, const StateSpec3D& spec, double r, double theta,
                                     double phi, const dynamics::TrajectoryPoint& at);

/// |sin th|^{2mu1+2mu2} |cos th|^{2mu3} |sin ph|^{2mu2} |cos ph|^{2mu1} sin th
double angular_weight(const Dunkl3DModel& model, double theta, double phi);

/// r^{2 + 2(mu1+mu2+mu3)}
double radial_weight(const Dunkl3DModel& model, double r);

}  // namespace dunkl
