#pragma once

#include <complex>

#include "dunkl/dynamics.hpp"
#include "dunkl/parity.hpp"

namespace dunkl {

/// One-dimensional Dunkl oscillator: Wigner parameter mu > -1/2, hbar > 0.
class Dunkl1DModel {
 public:
  Dunkl1DModel(double mu, double hbar = 1.0);

  double mu() const noexcept { return mu_; }
  double hbar() const noexcept { return hbar_; }

 private:
  double mu_;
  double hbar_;
};

struct StateSpec1D {
  int n = 0;
  Parity s = Parity::even;
};

struct WavefunctionSample {
  std::complex<double> value;
  double modulus_sq;

  static WavefunctionSample of(std::complex<double> v) noexcept { return {v, std::norm(v)}; }
};

/// nu = mu - s/2, the index of the inverse-square sector potential.
double nu(const Dunkl1DModel& model, Parity s);

/// lambda_n^s = hbar (2n + 1 + nu).
double eigenvalue_1d(const Dunkl1DModel& model, const StateSpec1D& spec);

/// sqrt(n! / (hbar^{nu+1} Gamma(n + nu + 1))), evaluated in log space.
double normalization_constant_1d(const Dunkl1DModel& model, const StateSpec1D& spec);

/// Invariant eigenfunction
///   Phi = N p_s(x) rho^{-(nu+1)} L_n^nu(x^2/(hbar rho^2)) exp[(i M rho rho' - 1) x^2 / (2 hbar rho^2)]
/// with p_+(x) = 1, p_-(x) = x, so Phi(-x) = s Phi(x). Orthonormal under |x|^{2 mu} dx.
WavefunctionSample eigenfunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                    const dynamics::TrajectoryPoint& at);

/// eta = -(2n + 1 + nu) Theta(t).
double phase_1d(const Dunkl1DModel& model, const StateSpec1D& spec, const dynamics::PinneyTrajectory& trajectory,
                double t);

/// Same, from an already interpolated trajectory point.
double phase_1d(const Dunkl1DModel& model, const StateSpec1D& spec, const dynamics::TrajectoryPoint& at);

/// psi = exp(i eta) Phi.
WavefunctionSample wavefunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                   const dynamics::PinneyTrajectory& trajectory, double t);

WavefunctionSample wavefunction_1d(const Dunkl1DModel& model, const StateSpec1D& spec, double x,
                                   const dynamics::TrajectoryPoint& at);

/// |x|^{2 mu}. At the origin: 0 for mu > 0, 1 for mu = 0, +infinity for mu < 0.
double dunkl_weight_1d(const Dunkl1DModel& model, double x);

}  // namespace dunkl
