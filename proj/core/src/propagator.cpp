#include "dunkl/oracle/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/oracle/operators.hpp"

namespace dunkl::oracle {

namespace {

double max_omega(const dynamics::Scenario& scenario) {
  constexpr int kSamples = 1000;
  double out = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    out = std::max(out, scenario.omega(scenario.t_end() * i / kSamples));
  }
  return out;
}

}  // namespace

void crank_nicolson_propagate(const DiscreteField& initial, const Dunkl1DModel& model, Parity s,
                              const dynamics::Scenario& scenario, double dt, std::size_t n_steps, std::size_t stride,
                              const SnapshotObserver& observer) {
  if (!(dt > 0.0)) throw ConfigError("propagator dt must be positive");
  if (stride == 0) throw ConfigError("propagator stride must be positive");
  const double t_final = dt * static_cast<double>(n_steps);
  if (t_final > scenario.t_end() * (1.0 + 1e-12)) {
    throw ConfigError("propagation to t=" + std::to_string(t_final) + " leaves the scenario span [0, " +
                      std::to_string(scenario.t_end()) + "]");
  }
  const double omega_max = max_omega(scenario);
  if (dt > 1e-2 / omega_max) {
    throw ConfigError("propagator dt=" + std::to_string(dt) + " exceeds 1e-2/max(omega)=" +
                      std::to_string(1e-2 / omega_max));
  }

  const auto& grid = initial.grid;
  const std::size_t n = grid.size();
  const double factor = 0.5 * dt / model.hbar();
  const Complex i_factor(0.0, factor);

  std::vector<Complex> psi = initial.values;
  std::vector<Complex> rhs(n), c_prime(n), d_prime(n);
  if (observer) observer(0, 0.0, initial);

  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    const auto op = propagator_hamiltonian(grid, model, s, scenario.mass(t_mid).value, scenario.omega_sq(t_mid));

    // rhs = (1 - i f H) psi
    for (std::size_t j = 0; j < n; ++j) {
      Complex h_psi = op.diag[j] * psi[j];
      if (j > 0) h_psi += op.off[j - 1] * psi[j - 1];
      if (j + 1 < n) h_psi += op.off[j] * psi[j + 1];
      rhs[j] = psi[j] - i_factor * h_psi;
    }

    // Thomas algorithm for (1 + i f H) psi_new = rhs.
    const auto breakdown = [&](std::size_t j) {
      return NumericalError("Crank-Nicolson tridiagonal solve broke down at step " + std::to_string(k + 1) +
                            " (row " + std::to_string(j) + ")");
    };
    Complex pivot = 1.0 + i_factor * op.diag[0];
    if (std::abs(pivot) < 1e-300) throw breakdown(0);
    c_prime[0] = n > 1 ? i_factor * op.off[0] / pivot : 0.0;
    d_prime[0] = rhs[0] / pivot;
    for (std::size_t j = 1; j < n; ++j) {
      const Complex lower = i_factor * op.off[j - 1];
      pivot = 1.0 + i_factor * op.diag[j] - lower * c_prime[j - 1];
      if (std::abs(pivot) < 1e-300 || !std::isfinite(std::abs(pivot))) throw breakdown(j);
      c_prime[j] = j + 1 < n ? i_factor * op.off[j] / pivot : 0.0;
      d_prime[j] = (rhs[j] - lower * d_prime[j - 1]) / pivot;
    }
    psi[n - 1] = d_prime[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) psi[j] = d_prime[j] - c_prime[j] * psi[j + 1];

    const std::size_t step = k + 1;
    if (observer && (step % stride == 0 || step == n_steps)) {
      observer(step, static_cast<double>(step) * dt, DiscreteField(grid, psi));
    }
  }
}

std::vector<Snapshot> crank_nicolson_propagate(const DiscreteField& initial, const Dunkl1DModel& model, Parity s,
                                               const dynamics::Scenario& scenario, double dt, std::size_t n_steps,
                                               std::size_t stride) {
  std::vector<Snapshot> out;
  crank_nicolson_propagate(initial, model, s, scenario, dt, n_steps, stride,
                           [&](std::size_t step, double t, const DiscreteField& field) {
                             out.push_back({step, t, field});
                           });
  return out;
}

}  // namespace dunkl::oracle
