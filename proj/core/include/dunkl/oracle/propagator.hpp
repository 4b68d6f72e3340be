#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dynamics.hpp"
#include "dunkl/oracle/grid.hpp"

namespace dunkl::oracle {

struct Snapshot {
  std::size_t step;
  double t;
  DiscreteField field;
};

using SnapshotObserver = std::function<void(std::size_t step, double t, const DiscreteField& field)>;

/// Crank-Nicolson propagation of a gauged field,
///   (1 + i dt H(t_mid) / 2 hbar) psi_{k+1} = (1 - i dt H(t_mid) / 2 hbar) psi_k,
/// with the finite-volume Hamiltonian frozen at each step midpoint.
/// The observer sees step 0, every `stride`-th step and the final step.
///
/// ConfigError when dt n_steps leaves the scenario span or dt > 1e-2 / max omega;
/// NumericalError (naming the step) when the tridiagonal solve breaks down.
void crank_nicolson_propagate(const DiscreteField& initial, const Dunkl1DModel& model, Parity s,
                              const dynamics::Scenario& scenario, double dt, std::size_t n_steps, std::size_t stride,
                              const SnapshotObserver& observer);

/// Convenience overload collecting the observed snapshots.
std::vector<Snapshot> crank_nicolson_propagate(const DiscreteField& initial, const Dunkl1DModel& model, Parity s,
                                               const dynamics::Scenario& scenario, double dt, std::size_t n_steps,
                                               std::size_t stride = 1);

}  // namespace dunkl::oracle
