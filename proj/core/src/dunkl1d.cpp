#include "dunkl/dunkl1d.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

Dunkl1DModel::Dunkl1DModel(double mu, double hbar) : mu_(mu), hbar_(hbar) {
  if (!(mu > -0.5)) {
    throw DomainError("Dunkl1DModel: mu must exceed -1/2 (normalizability), got " + std::to_string(mu));
  }
  if (!(hbar > 0.0)) throw DomainError("Dunkl1DModel: hbar must be positive");
}

double nu(const Dunkl1DModel& model, Parity s) { return model.mu() - 0.5 * sign(s); }

double eigenvalue_1d(const Dunkl1DModel& model, const StateSpec1D& spec) {
  return model.hbar() * (2.0 * spec.n + 1.0 + nu(model, spec.s));
}

double normalization_constant_1d(const Dunkl1DModel& model, const StateSpec1D& spec) {
  if (spec.n < 0) throw DomainError("normalization_constant_1d: n must be non-negative");
  const double v = nu(model, spec.s);
  const double log_n2 = specfun::log_gamma(spec.n + 1.0) - (v + 1.0) * std::log(model.hbar()) -
                        specfun::log_gamma(spec.n + v + 1.0);
  return std::exp(0.5 * log_n2);
}

WavefunctionSample eigenfunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                    const dynamics::TrajectoryPoint& at) {
  const double v = nu(model, spec.s);
  const double hbar = model.hbar();
  const double rho2 = at.rho * at.rho;
  const double u = x * x / (hbar * rho2);
  const double prefactor = spec.s == Parity::even ? 1.0 : x;
  const double radial = normalization_constant_1d(model, spec) * prefactor * std::pow(at.rho, -(v + 1.0)) *
                        specfun::laguerre(spec.n, v, u).value * std::exp(-0.5 * u);
  const double chirp = at.mass * at.rho_dot * x * x / (2.0 * hbar * at.rho);
  return WavefunctionSample::of(std::polar(1.0, chirp) * radial);
}

double phase_1d(const Dunkl1DModel& model, const StateSpec1D& spec, const dynamics::TrajectoryPoint& at) {
  return -(eigenvalue_1d(model, spec) / model.hbar()) * at.theta;
}

double phase_1d(const Dunkl1DModel& model, const StateSpec1D& spec, const dynamics::PinneyTrajectory& trajectory,
                double t) {
  return -(eigenvalue_1d(model, spec) / model.hbar()) * dynamics::phase_base(trajectory, t);
}

WavefunctionSample wavefunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                   const dynamics::TrajectoryPoint& at) {
  const auto phi = eigenfunction_1d(model, spec, x, at);
  return WavefunctionSample::of(std::polar(1.0, phase_1d(model, spec, at)) * phi.value);
}

WavefunctionSample wavefunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                   const dynamics::PinneyTrajectory& trajectory, double t) {
  return wavefunction_1d(model, spec, x, trajectory.at(t));
}

double dunkl_weight_1d(const Dunkl1DModel& model, double x) {
  const double mu = model.mu();
  if (x == 0.0) {
    if (mu > 0.0) return 0.0;
    if (mu == 0.0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return std::pow(std::abs(x), 2.0 * mu);
}

}  // namespace dunkl
