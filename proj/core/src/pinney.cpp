#include <algorithm>
#include <array>
#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <string>

#include "dunkl/dynamics.hpp"
#include "dunkl/errors.hpp"

namespace dunkl::dynamics {

namespace odeint = boost::numeric::odeint;
using Hermite = boost::math::interpolators::cardinal_cubic_hermite<std::vector<double>>;

namespace {

constexpr double kRhoFloor = 1e-8;
constexpr double kMaxNodeSpacing = 0.005;

}  // namespace

double equilibrium_rho(double mass0, double omega0) {
  if (!(mass0 > 0.0) || !(omega0 > 0.0)) throw DomainError("equilibrium_rho: inputs must be positive");
  return 1.0 / std::sqrt(mass0 * omega0);
}

PinneyOptions default_pinney_options(const Scenario& scenario) {
  PinneyOptions opts;
  opts.rho0 = equilibrium_rho(scenario.mass(0.0).value, scenario.omega(0.0));
  opts.rho_dot0 = 0.0;
  return opts;
}

double pinney_acceleration(const Scenario& scenario, double t, double rho, double rho_dot) {
  const auto m = scenario.mass(t);
  const double rho3 = rho * rho * rho;
  return -(m.derivative / m.value) * rho_dot - scenario.omega_sq(t) * rho + 1.0 / (m.value * m.value * rho3);
}

// ---------------------------------------------------------------------------

struct PinneyTrajectory::Interpolants {
  Hermite rho;
  Hermite rho_dot;
  Hermite theta;
};

PinneyTrajectory::PinneyTrajectory(Scenario scenario, std::vector<double> times, std::vector<double> rho,
                                   std::vector<double> rho_dot, std::vector<double> theta)
    : scenario_(std::move(scenario)),
      times_(std::move(times)),
      rho_(std::move(rho)),
      rho_dot_(std::move(rho_dot)),
      theta_(std::move(theta)) {
  const auto n = times_.size();
  if (n < 4 || rho_.size() != n || rho_dot_.size() != n || theta_.size() != n) {
    throw DomainError("PinneyTrajectory: need >= 4 nodes with matching column lengths");
  }
  if (times_.front() != 0.0) throw DomainError("PinneyTrajectory: first node must be t = 0");
  const double dt = times_[1] - times_[0];
  if (!(dt > 0.0)) throw DomainError("PinneyTrajectory: times must increase");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rho_[i] > 0.0)) throw DomainError("PinneyTrajectory: rho must stay positive");
  }

  std::vector<double> rho_ddot(n);
  std::vector<double> theta_dot(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = times_[i];
    rho_ddot[i] = pinney_acceleration(scenario_, t, rho_[i], rho_dot_[i]);
    theta_dot[i] = 1.0 / (scenario_.mass(t).value * rho_[i] * rho_[i]);
  }
  auto r = rho_;
  auto rd = rho_dot_;
  auto rd2 = rho_dot_;
  auto th = theta_;
  interp_ = std::make_shared<const Interpolants>(Interpolants{
      Hermite(std::move(r), std::move(rd), 0.0, dt),
      Hermite(std::move(rd2), std::move(rho_ddot), 0.0, dt),
      Hermite(std::move(th), std::move(theta_dot), 0.0, dt),
  });
}

TrajectoryPoint PinneyTrajectory::node(std::size_t i) const {
  const double t = times_.at(i);
  const auto m = scenario_.mass(t);
  return {t, rho_[i], rho_dot_[i], theta_[i], m.value, m.derivative, scenario_.omega_sq(t)};
}

TrajectoryPoint PinneyTrajectory::at(double t) const {
  const double end = times_.back();
  const double slack = 1e-12 * std::max(1.0, end);
  if (t < -slack || t > end + slack) {
    throw DomainError("PinneyTrajectory: t = " + std::to_string(t) + " outside [0, " + std::to_string(end) + "]");
  }
  t = std::clamp(t, 0.0, end);
  const auto m = scenario_.mass(t);
  return {t, interp_->rho(t), interp_->rho_dot(t), interp_->theta(t), m.value, m.derivative, scenario_.omega_sq(t)};
}

PinneyTrajectory PinneyTrajectory::with_scaled_rho(double factor) const {
  auto r = rho_;
  auto rd = rho_dot_;
  for (auto& v : r) v *= factor;
  for (auto& v : rd) v *= factor;
  return PinneyTrajectory(scenario_, times_, std::move(r), std::move(rd), theta_);
}

// ---------------------------------------------------------------------------

PinneyTrajectory solve_ermakov_pinney(const Scenario& scenario, const PinneyOptions& options) {
  if (!(options.rho0 > 0.0)) throw DomainError("solve_ermakov_pinney: rho0 must be positive");
  for (double tol : {options.rel_tol, options.abs_tol}) {
    if (!(tol >= 1e-13 && tol <= 1e-3)) throw DomainError("solve_ermakov_pinney: tolerances must lie in [1e-13, 1e-3]");
  }

  using State = std::array<double, 3>;  // rho, rho_dot, theta
  const double t_end = scenario.t_end();
  const auto n_nodes = std::max<std::size_t>(
      std::max<std::size_t>(options.min_nodes, 4),
      static_cast<std::size_t>(std::ceil(t_end / kMaxNodeSpacing)) + 1);
  const double spacing = t_end / static_cast<double>(n_nodes - 1);

  auto system = [&scenario](const State& y, State& dydt, double t) {
    if (!(y[0] >= kRhoFloor)) {
      throw SingularityError("Ermakov-Pinney: rho fell below 1e-8 at t = " + std::to_string(t), t);
    }
    const double mass = scenario.mass(t).value;
    dydt[0] = y[1];
    dydt[1] = pinney_acceleration(scenario, t, y[0], y[1]);
    dydt[2] = 1.0 / (mass * y[0] * y[0]);
  };

  std::vector<double> times(n_nodes), rho(n_nodes), rho_dot(n_nodes), theta(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) times[i] = spacing * static_cast<double>(i);
  times.back() = t_end;
  rho[0] = options.rho0;
  rho_dot[0] = options.rho_dot0;
  theta[0] = 0.0;

  auto stepper = odeint::make_dense_output(options.abs_tol, options.rel_tol, spacing,
                                           odeint::runge_kutta_dopri5<State>());
  const State y0{options.rho0, options.rho_dot0, 0.0};
  stepper.initialize(y0, 0.0, std::min(spacing, 1e-3));

  const double min_step = 1e-14 * std::max(1.0, t_end);
  std::size_t next = 1;
  try {
    while (next < n_nodes) {
      // Land exactly on t_end so profiles are never sampled past the span.
      const double remaining = t_end - stepper.current_time();
      if (stepper.current_time_step() > remaining) {
        stepper.initialize(stepper.current_state(), stepper.current_time(), remaining);
      }
      const auto [t_old, t_new] = stepper.do_step(system);
      (void)t_old;
      if (next < n_nodes && times[next] > t_new + min_step && stepper.current_time_step() < min_step) {
        throw StiffnessError("Ermakov-Pinney: step size underflow at t = " + std::to_string(t_new), t_new);
      }
      State y{};
      while (next < n_nodes && times[next] <= t_new + min_step) {
        stepper.calc_state(times[next], y);
        if (!(y[0] >= kRhoFloor) || !std::isfinite(y[1])) {
          throw SingularityError("Ermakov-Pinney: rho fell below 1e-8 at t = " + std::to_string(times[next]),
                                 times[next]);
        }
        rho[next] = y[0];
        rho_dot[next] = y[1];
        theta[next] = y[2];
        ++next;
      }
    }
  } catch (const odeint::step_adjustment_error& e) {
    throw StiffnessError(std::string("Ermakov-Pinney: ") + e.what(), stepper.current_time());
  }

  return PinneyTrajectory(scenario, std::move(times), std::move(rho), std::move(rho_dot), std::move(theta));
}

double pinney_residual(const PinneyTrajectory& trajectory) {
  // 6th-order central difference of rho_dot on the uniform nodes
  static constexpr std::array<double, 7> kStencil{-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0,
                                                  3.0 / 4.0,   -3.0 / 20.0, 1.0 / 60.0};
  const auto times = trajectory.times();
  const auto rho = trajectory.rho();
  const auto rho_dot = trajectory.rho_dot();
  const auto& scenario = trajectory.scenario();
  const double h = times[1] - times[0];
  double worst = 0.0;
  for (std::size_t i = 3; i + 3 < times.size(); ++i) {
    double rho_ddot = 0.0;
    for (std::size_t k = 0; k < kStencil.size(); ++k) rho_ddot += kStencil[k] * rho_dot[i + k - 3];
    rho_ddot /= h;
    const auto m = scenario.mass(times[i]);
    const double w2rho = scenario.omega_sq(times[i]) * rho[i];
    const double lhs = rho_ddot + (m.derivative / m.value) * rho_dot[i] + w2rho;
    const double rhs = 1.0 / (m.value * m.value * rho[i] * rho[i] * rho[i]);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(w2rho)));
  }
  return worst;
}

InvariantCoefficients invariant_coefficients(const TrajectoryPoint& p) {
  const double rho2 = p.rho * p.rho;
  const double m_rho_dot = p.mass * p.rho_dot;
  return {rho2, 1.0 / rho2 + m_rho_dot * m_rho_dot, -p.mass * p.rho * p.rho_dot};
}

double phase_base(const PinneyTrajectory& trajectory, double t) { return trajectory.at(t).theta; }

}  // namespace dunkl::dynamics
