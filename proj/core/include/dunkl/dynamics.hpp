#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace dunkl::dynamics {

// ---------------------------------------------------------------------------
// Time profiles for M(t) and omega(t)

struct Constant {
  double c;
};

/// c0 + rate * t
struct Linear {
  double c0;
  double rate;
};

/// c0 * exp(gamma * t)
struct Exponential {
  double c0;
  double gamma;
};

/// c0 * (1 + amplitude * cos(rate * t))
struct Sinusoidal {
  double c0;
  double amplitude;
  double rate;
};

/// Sampled profile with C1 cubic (modified Akima) interpolation.
/// Needs at least four samples with strictly increasing times.
class Tabulated {
 public:
  Tabulated(std::vector<double> times, std::vector<double> values);

  std::span<const double> times() const noexcept { return times_; }
  std::span<const double> values() const noexcept { return values_; }
  double value(double t) const;
  double derivative(double t) const;

 private:
  struct Interpolant;
  std::vector<double> times_;
  std::vector<double> values_;
  std::shared_ptr<const Interpolant> spline_;
};

using TimeProfile = std::variant<Constant, Linear, Exponential, Sinusoidal, Tabulated>;

struct ProfileValue {
  double value;
  double derivative;
};

/// Value and exact time derivative. Tabulated profiles throw DomainError
/// outside their sample range.
ProfileValue evaluate_profile(const TimeProfile& profile, double t);

std::string_view profile_kind(const TimeProfile& profile);

// ---------------------------------------------------------------------------
// Scenario

/// Whether the frequency profile describes omega(t) or omega(t)^2.
enum class FrequencyForm { omega, omega_squared };

/// Mass and frequency histories on [0, t_end] plus hbar. Construction checks
/// positivity of M and omega^2 on 1000 uniform samples.
class Scenario {
 public:
  Scenario(TimeProfile mass, TimeProfile frequency, FrequencyForm form, double hbar, double t_end);

  /// Constant M and omega.
  static Scenario stationary(double mass, double omega, double hbar, double t_end);

  ProfileValue mass(double t) const { return evaluate_profile(mass_, t); }
  double omega_sq(double t) const;
  double omega(double t) const;

  const TimeProfile& mass_profile() const noexcept { return mass_; }
  const TimeProfile& frequency_profile() const noexcept { return frequency_; }
  FrequencyForm frequency_form() const noexcept { return form_; }
  double hbar() const noexcept { return hbar_; }
  double t_end() const noexcept { return t_end_; }

 private:
  TimeProfile mass_;
  TimeProfile frequency_;
  FrequencyForm form_;
  double hbar_;
  double t_end_;
};

// ---------------------------------------------------------------------------
// Ermakov-Pinney auxiliary equation
//   rho'' + (M'/M) rho' + omega^2 rho = 1 / (M^2 rho^3)

/// Stationary amplitude (M0 omega0)^{-1/2}.
double equilibrium_rho(double mass0, double omega0);

struct PinneyOptions {
  double rho0 = 1.0;
  double rho_dot0 = 0.0;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  /// Lower bound on the number of uniform output nodes.
  std::size_t min_nodes = 2001;
};

/// Equilibrium start rho(0) = equilibrium_rho(M(0), omega(0)), rho'(0) = 0.
PinneyOptions default_pinney_options(const Scenario& scenario);

/// Everything the wavefunctions need at one instant.
struct TrajectoryPoint {
  double t;
  double rho;
  double rho_dot;
  double theta;  ///< phase base, integral of 1/(M rho^2) from 0
  double mass;
  double mass_dot;
  double omega_sq;
};

/// Dense, immutable solution of the Ermakov-Pinney equation on uniform nodes.
class PinneyTrajectory {
 public:
  PinneyTrajectory(Scenario scenario, std::vector<double> times, std::vector<double> rho,
                   std::vector<double> rho_dot, std::vector<double> theta);

  const Scenario& scenario() const noexcept { return scenario_; }
  std::size_t size() const noexcept { return times_.size(); }
  std::span<const double> times() const noexcept { return times_; }
  std::span<const double> rho() const noexcept { return rho_; }
  std::span<const double> rho_dot() const noexcept { return rho_dot_; }
  std::span<const double> theta() const noexcept { return theta_; }
  double t_end() const noexcept { return times_.back(); }

  TrajectoryPoint node(std::size_t i) const;

  /// Cubic Hermite interpolation between nodes. DomainError outside [0, t_end].
  TrajectoryPoint at(double t) const;

  /// Copy with rho and rho_dot multiplied by `factor` (theta untouched).
  /// The result is no longer a solution; verification negative controls use it.
  PinneyTrajectory with_scaled_rho(double factor) const;

 private:
  struct Interpolants;
  Scenario scenario_;
  std::vector<double> times_;
  std::vector<double> rho_;
  std::vector<double> rho_dot_;
  std::vector<double> theta_;
  std::shared_ptr<const Interpolants> interp_;
};

/// Adaptive Dormand-Prince 5(4) integration of (rho, rho', Theta) with dense
/// output resampled to max(min_nodes, t_end/0.005 + 1) uniform nodes.
///
/// Throws SingularityError when rho drops below 1e-8 and StiffnessError when
/// the step size underflows.
PinneyTrajectory solve_ermakov_pinney(const Scenario& scenario, const PinneyOptions& options);

/// Right-hand side rho'' of the Ermakov-Pinney equation.
double pinney_acceleration(const Scenario& scenario, double t, double rho, double rho_dot);

/// Max over interior nodes of
///   |rho'' + (M'/M) rho' + omega^2 rho - 1/(M^2 rho^3)| / max(1, |omega^2 rho|)
/// with rho'' differentiated from the rho' node values.
double pinney_residual(const PinneyTrajectory& trajectory);

/// Coefficients of the invariant I = (alpha T1 + beta T2 + gamma T3) / 2.
struct InvariantCoefficients {
  double alpha;
  double beta;
  double gamma;
};

InvariantCoefficients invariant_coefficients(const TrajectoryPoint& point);

/// Theta(t) = integral_0^t dt' / (M rho^2).
double phase_base(const PinneyTrajectory& trajectory, double t);

}  // namespace dunkl::dynamics
