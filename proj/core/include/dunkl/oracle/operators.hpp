#pragma once

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dynamics.hpp"
#include "dunkl/oracle/grid.hpp"

namespace dunkl::oracle {

// All operators act on gauged fields phi = x^mu psi in a fixed parity sector.
// Internally they work on the even, smooth factor chi = phi / x^a with
// a = nu + 1/2, where the radial Dunkl kinetic term reads
//   T1 chi = -hbar^2 (chi'' + 2a chi'/x)
// and fourth-order central differences close at the origin by even
// reflection of chi and by zero Dirichlet data beyond x_max.

/// Exponent a = nu + 1/2 = mu + (1 - s)/2 relating phi and chi.
double sector_exponent(const Dunkl1DModel& model, Parity s);

/// Multiply by x^mu (gauge) or divide by it (ungauge).
DiscreteField gauge(const Dunkl1DModel& model, const DiscreteField& psi);
DiscreteField ungauge(const Dunkl1DModel& model, const DiscreteField& phi);

/// Samples of the exact state psi_n^s at a trajectory point in the gauged
/// representation; include_phase = false drops exp(i eta).
DiscreteField sample_state(const Dunkl1DModel& model, const StateSpec1D& spec, const SpatialGrid1D& grid,
                           const dynamics::TrajectoryPoint& at, bool include_phase = true);

/// H = T1/(2M) + M omega^2 x^2 / 2.
DiscreteField apply_parity_hamiltonian(const DiscreteField& field, const Dunkl1DModel& model, Parity s, double mass,
                                       double omega_sq);

/// I = (rho^2 T1 + (1/rho^2 + M^2 rho'^2) T2 - M rho rho' T3) / 2 at a trajectory point.
DiscreteField apply_invariant_1d(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                 const dynamics::TrajectoryPoint& at);

/// Invariant after the unitary chirp removal: (rho^2 T1 + x^2/rho^2) / 2.
DiscreteField apply_transformed_invariant_1d(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                             double rho);

/// Generators T1 = P^2 + hbar^2 (nu^2 - 1/4)/x^2, T2 = x^2, T3 = xP + Px.
DiscreteField apply_t1(const DiscreteField& field, const Dunkl1DModel& model, Parity s);
DiscreteField apply_t2(const DiscreteField& field);
DiscreteField apply_t3(const DiscreteField& field, const Dunkl1DModel& model, Parity s);

/// Second-order symmetric finite-volume Hamiltonian used by the propagator.
/// Real symmetric tridiagonal in the plain inner product on phi.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  ///< off[j] couples j and j+1
};

Tridiagonal propagator_hamiltonian(const SpatialGrid1D& grid, const Dunkl1DModel& model, Parity s, double mass,
                                   double omega_sq);

DiscreteField apply_propagator_hamiltonian(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                           double mass, double omega_sq);

}  // namespace dunkl::oracle
