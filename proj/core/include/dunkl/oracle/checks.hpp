#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dunkl3d.hpp"
#include "dunkl/dynamics.hpp"
#include "dunkl/oracle/grid.hpp"
#include "dunkl/oracle/propagator.hpp"

namespace dunkl::oracle {

/// 2 h sum conj(f_j) g_j: the full-line Dunkl inner product of gauged
/// half-line fields. DomainError on grid mismatch.
Complex weighted_inner_product(const DiscreteField& f, const DiscreteField& g);

/// |<f|g>| / (|f| |g|) in [0, 1]. DomainError when either norm differs from 1
/// by more than 1e-3 (midpoint quadrature of x^{2 mu} limits exactness).
double fidelity(const DiscreteField& f, const DiscreteField& g);

/// Grid of spacing h reaching auto_extent for states up to n_max over the
/// trajectory's largest rho.
SpatialGrid1D auto_grid(const Dunkl1DModel& model, Parity s, int n_max, const dynamics::PinneyTrajectory& trajectory,
                        double h);

/// max_t |i hbar d_t phi - H phi| / |phi| over analytic samples; d_t by the
/// fourth-order central stencil with step dt.
ResidualReport schrodinger_residual_1d(const Dunkl1DModel& model, const StateSpec1D& spec,
                                       const dynamics::PinneyTrajectory& trajectory, std::span<const double> t_samples,
                                       const SpatialGrid1D& grid, double dt = 1e-3, double tolerance = 1e-4);

/// max_t |I Phi_n - lambda_n Phi_n| / |Phi_n| for the invariant eigenfunction.
ResidualReport invariant_eigen_residual_1d(const Dunkl1DModel& model, const StateSpec1D& spec,
                                           const dynamics::PinneyTrajectory& trajectory,
                                           std::span<const double> t_samples, const SpatialGrid1D& grid,
                                           double tolerance = 1e-4);

/// Relative expectation of the invariant, Re<phi|I phi> / <phi|phi>.
double invariant_expectation(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                             const dynamics::TrajectoryPoint& at);

/// max_k |<I>(t_k) - <I>(t_0)| / |<I>(t_0)| over the snapshots.
ResidualReport invariant_expectation_drift(std::span<const Snapshot> series, const Dunkl1DModel& model, Parity s,
                                           const dynamics::PinneyTrajectory& trajectory, double tolerance = 1e-4);

/// Gram matrix of the invariant eigenfunctions n = 0..n_max of one parity
/// under |x|^{2 mu} dx, by generalized Gauss-Laguerre quadrature.
Eigen::MatrixXcd gram_matrix_1d(const Dunkl1DModel& model, Parity s, int n_max, const dynamics::TrajectoryPoint& at);

/// Gram matrix of full 3D states under the radial and angular weights by
/// tensor-product tanh-sinh quadrature.
Eigen::MatrixXcd gram_matrix_3d(const Dunkl3DModel& model, std::span<const StateSpec3D> states,
                                const dynamics::TrajectoryPoint& at);

/// max |G - 1| entrywise.
double identity_deviation(const Eigen::MatrixXcd& gram);

enum class AngularFactor { azimuthal, polar };

/// Pointwise residual of the separated angular equation
///   azimuthal: F'' + 2(mu2 cot - mu1 tan) F' - [mu1 (1-s1)/cos^2 + mu2 (1-s2)/sin^2] F + k^2 F
///   polar:     F'' + 2[(1/2+mu1+mu2) cot - mu3 tan] F' - [mu3 (1-s3)/cos^2 + k^2/sin^2] F + q^2 F
/// on n_nodes midpoints kept at least pi/(4 n_nodes) from the coordinate
/// singularities. The value is max|residual| / max(|F''| + |c1 F'| + |c0 F|).
/// DomainError when n_nodes < 32.
ResidualReport angular_residual(const Dunkl3DModel& model, const StateSpec3D& spec, AngularFactor which,
                                int n_nodes = 64, double tolerance = 1e-8);

enum class Commutator { t1_t2, t2_t3, t1_t3 };

/// Discrete check of [T1,T2] = -2i hbar T3, [T2,T3] = 4i hbar T2,
/// [T1,T3] = -4i hbar T1 on a test field, as a relative L2 residual over the
/// interior excluding `band` nodes at each end.
ResidualReport commutator_check(Commutator which, const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                double tolerance, std::size_t band = 5);

/// exp(-width (x - center)^2) sampled on the grid.
DiscreteField gaussian_bump(const SpatialGrid1D& grid, double center, double width);

}  // namespace dunkl::oracle
