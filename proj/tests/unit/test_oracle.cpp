#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <doctest.h>

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dunkl3d.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/oracle/checks.hpp"
#include "dunkl/oracle/operators.hpp"
#include "oracles.hpp"

using namespace dunkl;
using namespace dunkl::oracle;

namespace {

dynamics::PinneyTrajectory stationary_trajectory(double t_end) {
  const auto scenario = dynamics::Scenario::stationary(1.0, 1.0, 1.0, t_end);
  return dynamics::solve_ermakov_pinney(scenario, dynamics::default_pinney_options(scenario));
}

dynamics::PinneyTrajectory breathing_trajectory(double t_end, double hbar = 1.0) {
  const dynamics::Scenario scenario(dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0},
                                    dynamics::FrequencyForm::omega, hbar, t_end);
  auto options = dynamics::default_pinney_options(scenario);
  options.rho0 = 1.25;
  return dynamics::solve_ermakov_pinney(scenario, options);
}

const dynamics::TrajectoryPoint kRest{0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0};
const dynamics::TrajectoryPoint kMoving{0.7, 1.2, 0.35, 0.5, 1.4, 0.3, 1.0};

double max_abs(const DiscreteField& f, std::size_t begin, std::size_t end) {
  double out = 0.0;
  for (std::size_t j = begin; j < end; ++j) out = std::max(out, std::abs(f.values[j]));
  return out;
}

// Relative l2 distance of H phi from lambda phi.
double eigen_defect(const DiscreteField& h_phi, const DiscreteField& phi, double lambda) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    num += std::norm(h_phi.values[j] - lambda * phi.values[j]);
    den += std::norm(phi.values[j]);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("cell-centred grid") {
    const SpatialGrid1D grid(10.0, 1000);
    CHECK(grid.h() == doctest::Approx(0.01));
    CHECK(grid.x(0) == doctest::Approx(0.005));
    CHECK(grid.x(999) == doctest::Approx(9.995));
    CHECK(grid.points().size() == 1000);
    CHECK_THROWS_AS(SpatialGrid1D(1.0, 15), ConfigError);
    CHECK_THROWS_AS(SpatialGrid1D(-1.0, 100), ConfigError);
    const auto spaced = SpatialGrid1D::with_spacing(0.01, 8.0);
    CHECK(spaced.size() == 800);
    CHECK(spaced.h() == doctest::Approx(0.01));
    CHECK(auto_extent(1.0, 1.0, 0, 0.0) == doctest::Approx(std::sqrt(80.0)));
    CHECK(auto_extent(2.0, 0.5, 3, -0.5) == doctest::Approx(2.0 * std::sqrt(0.5 * 94.0)));
  }

  TEST_CASE("discrete fields reject bad data and combine linearly") {
    const SpatialGrid1D grid(1.0, 16);
    CHECK_THROWS_AS(DiscreteField(grid, std::vector<Complex>(15)), DomainError);
    std::vector<Complex> bad(16);
    bad[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(DiscreteField(grid, bad), NumericalError);
    const auto a = gaussian_bump(grid, 0.3, 2.0);
    const auto sum = a + Complex(0.0, 2.0) * a - a;
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(sum.values[j] - Complex(0.0, 2.0) * a.values[j]) < 1e-15);
    CHECK_THROWS_AS(a + DiscreteField::zeros(SpatialGrid1D(2.0, 16)), DomainError);
  }

  TEST_CASE("gauge and ungauge are inverse") {
    const Dunkl1DModel model(0.7);
    const auto grid = SpatialGrid1D::with_spacing(0.05, 6.0);
    const auto f = gaussian_bump(grid, 1.0, 0.5);
    const auto back = ungauge(model, gauge(model, f));
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(back.values[j] - f.values[j]) <= 1e-14);
    CHECK(sector_exponent(model, Parity::even) == doctest::Approx(0.7));
    CHECK(sector_exponent(model, Parity::odd) == doctest::Approx(1.7));
  }

  TEST_CASE("parity hamiltonian reproduces stationary eigenvalues") {
    const auto grid = SpatialGrid1D::with_spacing(0.02, 12.0);
    for (const double mu : {0.0, 0.5, 1.5}) {
      const Dunkl1DModel model(mu);
      for (const auto s : {Parity::even, Parity::odd}) {
        for (int n = 0; n <= 3; ++n) {
          const auto phi = sample_state(model, {n, s}, grid, kRest, false);
          const auto h_phi = apply_parity_hamiltonian(phi, model, s, 1.0, 1.0);
          CHECK(eigen_defect(h_phi, phi, eigenvalue_1d(model, {n, s})) < 1e-3);
        }
      }
    }
  }

  TEST_CASE("operators map the zero field to zero") {
    const Dunkl1DModel model(0.4);
    const auto zero = DiscreteField::zeros(SpatialGrid1D(5.0, 64));
    CHECK(max_abs(apply_parity_hamiltonian(zero, model, Parity::odd, 1.3, 0.7), 0, 64) == 0.0);
    CHECK(max_abs(apply_invariant_1d(zero, model, Parity::even, kMoving), 0, 64) == 0.0);
    CHECK(max_abs(apply_propagator_hamiltonian(zero, model, Parity::even, 1.0, 1.0), 0, 64) == 0.0);
  }

  TEST_CASE("sector operators converge at fourth order") {
    const Dunkl1DModel model(0.5);
    for (const auto s : {Parity::even, Parity::odd}) {
      const StateSpec1D spec{2, s};
      const double lambda = eigenvalue_1d(model, spec);
      const auto defect = [&](double h) {
        const auto grid = SpatialGrid1D::with_spacing(h, 12.0);
        const auto phi = sample_state(model, spec, grid, kRest, false);
        return eigen_defect(apply_parity_hamiltonian(phi, model, s, 1.0, 1.0), phi, lambda);
      };
      const double order = oracles::observed_order(defect(0.08), defect(0.04));
      CHECK(order == doctest::Approx(4.0).epsilon(0.3 / 4.0));
    }
  }

  TEST_CASE("generators obey their closed-form action on a polynomial") {
    // chi = x^2: T1 chi = -hbar^2 (2 + 4a), T3 chi = -i hbar (2a + 5) x^2.
    const Dunkl1DModel model(0.3, 0.6);
    const auto grid = SpatialGrid1D::with_spacing(0.01, 2.0);
    const double a = sector_exponent(model, Parity::even);
    std::vector<Complex> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::pow(grid.x(j), a + 2.0);
    const DiscreteField phi(grid, v);
    const auto t1 = apply_t1(phi, model, Parity::even);
    const auto t3 = apply_t3(phi, model, Parity::even);
    const auto t2 = apply_t2(phi);
    for (std::size_t j = 0; j + 3 < grid.size(); ++j) {
      const double x = grid.x(j);
      const double chi_to_phi = std::pow(x, a);
      CHECK(std::abs(t1.values[j] - (-0.36 * (2.0 + 4.0 * a)) * chi_to_phi) <= 1e-8);
      CHECK(std::abs(t3.values[j] - Complex(0.0, -0.6 * (2.0 * a + 5.0)) * phi.values[j]) <= 1e-8);
      CHECK(std::abs(t2.values[j] - x * x * phi.values[j]) <= 1e-14);
    }
  }

  TEST_CASE("invariant at rest equals the transformed invariant") {
    const Dunkl1DModel model(0.5);
    const auto grid = SpatialGrid1D::with_spacing(0.02, 10.0);
    const auto f = gaussian_bump(grid, 1.5, 0.8);
    for (const double rho : {1.0, 1.3}) {
      auto at = kRest;
      at.rho = rho;
      const auto direct = apply_invariant_1d(f, model, Parity::odd, at);
      const auto transformed = apply_transformed_invariant_1d(f, model, Parity::odd, rho);
      for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(direct.values[j] - transformed.values[j]) <= 1e-12);
    }
  }

  TEST_CASE("invariant is linear") {
    const Dunkl1DModel model(1.1);
    const auto grid = SpatialGrid1D::with_spacing(0.02, 10.0);
    const auto f = gaussian_bump(grid, 1.0, 0.5);
    const auto g = gaussian_bump(grid, 3.0, 2.0);
    const Complex a(0.3, -1.2);
    const Complex b(2.0, 0.5);
    const auto lhs = apply_invariant_1d(a * f + b * g, model, Parity::even, kMoving);
    const auto rhs = a * apply_invariant_1d(f, model, Parity::even, kMoving) +
                     b * apply_invariant_1d(g, model, Parity::even, kMoving);
    CHECK(max_abs(lhs - rhs, 0, grid.size()) <= 1e-11 * max_abs(lhs, 0, grid.size()));
  }

  TEST_CASE("invariant eigen-relation holds at a moving trajectory point") {
    const Dunkl1DModel model(0.8);
    const auto grid = SpatialGrid1D::with_spacing(0.01, 14.0);
    for (const auto s : {Parity::even, Parity::odd}) {
      for (int n = 0; n <= 3; ++n) {
        const auto phi = sample_state(model, {n, s}, grid, kMoving);
        const auto i_phi = apply_invariant_1d(phi, model, s, kMoving);
        CHECK(eigen_defect(i_phi, phi, eigenvalue_1d(model, {n, s})) < 1e-4);
        CHECK(invariant_expectation(phi, model, s, kMoving) ==
              doctest::Approx(eigenvalue_1d(model, {n, s})).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("schrodinger residual: stationary, breathing and a corrupted trajectory") {
    const std::vector<double> samples{0.5, 1.0, 1.5};
    {
      const Dunkl1DModel model(0.5);
      const auto trajectory = stationary_trajectory(2.0);
      const auto grid = auto_grid(model, Parity::even, 2, trajectory, 0.01);
      const auto report = schrodinger_residual_1d(model, {2, Parity::even}, trajectory, samples, grid);
      CHECK(report.name == "schrodinger-residual");
      CHECK(report.passed);
      CHECK(report.value < 1e-4);
    }
    {
      const Dunkl1DModel model(1.5, 0.8);
      const auto trajectory = breathing_trajectory(2.0, 0.8);
      const auto grid = auto_grid(model, Parity::odd, 1, trajectory, 0.01);
      const auto report = schrodinger_residual_1d(model, {1, Parity::odd}, trajectory, samples, grid);
      CHECK(report.passed);
      // rho rescaled by 1% is no longer a solution of the auxiliary equation.
      const auto corrupted = trajectory.with_scaled_rho(1.01);
      const auto bad = schrodinger_residual_1d(model, {1, Parity::odd}, corrupted, samples, grid);
      CHECK_FALSE(bad.passed);
      CHECK(bad.value > 100.0 * report.value);
      // The invariant eigen-relation is algebraic in rho and rho' and survives the rescaling.
      CHECK(invariant_eigen_residual_1d(model, {1, Parity::odd}, corrupted, samples, grid).passed);
    }
    {
      const Dunkl1DModel model(0.0);
      const auto trajectory = stationary_trajectory(1.0);
      const auto grid = auto_grid(model, Parity::even, 0, trajectory, 0.02);
      const std::vector<double> too_early{0.001};
      CHECK_THROWS_AS(schrodinger_residual_1d(model, {0, Parity::even}, trajectory, too_early, grid), DomainError);
    }
  }

  TEST_CASE("weighted inner product is hermitian, linear and positive") {
    const auto grid = SpatialGrid1D::with_spacing(0.05, 8.0);
    const auto f = Complex(0.4, 1.0) * gaussian_bump(grid, 1.0, 1.0);
    const auto g = gaussian_bump(grid, 2.0, 0.3);
    CHECK(std::abs(weighted_inner_product(f, g) - std::conj(weighted_inner_product(g, f))) <= 1e-14);
    const Complex c(1.5, -0.5);
    CHECK(std::abs(weighted_inner_product(f, c * g) - c * weighted_inner_product(f, g)) <= 1e-13);
    CHECK(weighted_inner_product(f, f).real() > 0.0);
    CHECK(std::abs(weighted_inner_product(f, f).imag()) <= 1e-15);
    CHECK_THROWS_AS(weighted_inner_product(f, DiscreteField::zeros(SpatialGrid1D(8.0, 17))), DomainError);
  }

  TEST_CASE("sampled eigenstates are normalized and orthogonal on the grid") {
    const Dunkl1DModel model(0.0);
    const auto grid = SpatialGrid1D::with_spacing(0.01, 12.0);
    const auto a = sample_state(model, {0, Parity::even}, grid, kMoving);
    const auto b = sample_state(model, {1, Parity::even}, grid, kMoving);
    CHECK(weighted_inner_product(a, a).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(weighted_inner_product(a, b)) <= 1e-12);
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(a, Complex(0.0, 1.0) * a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(a, b) <= 1e-12);
    CHECK_THROWS_AS(fidelity(a, 2.0 * b), DomainError);
  }

  TEST_CASE("finite-volume hamiltonian is symmetric and exact on x^2") {
    const Dunkl1DModel model(0.6);
    const auto grid = SpatialGrid1D::with_spacing(0.02, 6.0);
    for (const auto s : {Parity::even, Parity::odd}) {
      const auto op = propagator_hamiltonian(grid, model, s, 0.5, 0.0);
      CHECK(op.diag.size() == grid.size());
      CHECK(op.off.size() == grid.size() - 1);
      const auto f = Complex(1.0, 0.5) * gaussian_bump(grid, 1.0, 1.0);
      const auto g = gaussian_bump(grid, 2.0, 0.7);
      const Complex fhg = weighted_inner_product(f, apply_propagator_hamiltonian(g, model, s, 0.5, 0.0));
      const Complex hfg = weighted_inner_product(apply_propagator_hamiltonian(f, model, s, 0.5, 0.0), g);
      CHECK(std::abs(fhg - hfg) <= 1e-12 * std::abs(fhg));

      // With hbar^2 / 2M = 1 and no potential, chi = x^2 maps to -(2 + 4a) chi / x^2.
      const double a = sector_exponent(model, s);
      std::vector<Complex> v(grid.size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::pow(grid.x(j), a + 2.0);
      const auto h_phi = apply_propagator_hamiltonian(DiscreteField(grid, v), model, s, 0.5, 0.0);
      for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double expected = -(2.0 + 4.0 * a) * std::pow(grid.x(j), a);
        CHECK(std::abs(h_phi.values[j] - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
      }
    }
  }

  TEST_CASE("finite-volume hamiltonian has the right spectrum") {
    const auto grid = SpatialGrid1D::with_spacing(0.01, 12.0);
    for (const double mu : {0.0, 0.5, 2.0}) {
      const Dunkl1DModel model(mu);
      for (const auto s : {Parity::even, Parity::odd}) {
        for (int n = 0; n <= 2; ++n) {
          const auto phi = sample_state(model, {n, s}, grid, kRest, false);
          const auto h_phi = apply_propagator_hamiltonian(phi, model, s, 1.0, 1.0);
          const double rayleigh = (weighted_inner_product(phi, h_phi) / weighted_inner_product(phi, phi)).real();
          CHECK(rayleigh == doctest::Approx(eigenvalue_1d(model, {n, s})).epsilon(1e-3));
        }
      }
    }
  }

  TEST_CASE("angular residuals of valid states are at round-off") {
    const Dunkl3DModel model({0.3, 0.5, 0.2});
    const std::vector<StateSpec3D> states{
        {0, HalfInteger::integer(0), HalfInteger::integer(0), {Parity::even, Parity::even, Parity::even}},
        {1, HalfInteger::integer(2), HalfInteger::integer(1), {Parity::even, Parity::even, Parity::even}},
        {0, HalfInteger::from_twice(1), HalfInteger::from_twice(3), {Parity::even, Parity::odd, Parity::odd}},
        {2, HalfInteger::from_twice(5), HalfInteger::integer(2), {Parity::odd, Parity::odd, Parity::odd}},
    };
    for (const auto& spec : states) {
      const auto az = angular_residual(model, spec, AngularFactor::azimuthal);
      const auto po = angular_residual(model, spec, AngularFactor::polar);
      CHECK(az.name == "angular-residual-azimuthal");
      CHECK(po.name == "angular-residual-polar");
      CHECK(az.passed);
      CHECK(po.passed);
      CHECK(az.value < 1e-10);
      CHECK(po.value < 1e-10);
    }
    CHECK_THROWS_AS(angular_residual(model, states[0], AngularFactor::polar, 16), DomainError);
  }

  TEST_CASE("commutation relations on a smooth bump") {
    const auto grid = SpatialGrid1D::with_spacing(0.005, 8.0);
    const auto bump = gaussian_bump(grid, 3.0, 4.0);
    for (const double mu : {0.0, 0.5, 1.5}) {
      const Dunkl1DModel model(mu, 0.9);
      for (const auto s : {Parity::even, Parity::odd}) {
        const auto c12 = commutator_check(Commutator::t1_t2, bump, model, s, 1e-3);
        const auto c23 = commutator_check(Commutator::t2_t3, bump, model, s, 1e-4);
        const auto c13 = commutator_check(Commutator::t1_t3, bump, model, s, 1e-3);
        CHECK(c12.name == "commutator-t1-t2");
        CHECK(c23.name == "commutator-t2-t3");
        CHECK(c13.name == "commutator-t1-t3");
        CHECK(c12.passed);
        CHECK(c23.passed);
        CHECK(c13.passed);
      }
    }
    CHECK_THROWS_AS(commutator_check(Commutator::t1_t2, DiscreteField::zeros(SpatialGrid1D(1.0, 16)), Dunkl1DModel(0.0),
                                     Parity::even, 1e-3, 8),
                    ConfigError);
  }

  TEST_CASE("gram matrices are the identity") {
    for (const double mu : {0.0, 0.5, 1.5}) {
      const Dunkl1DModel model(mu, 0.7);
      for (const auto s : {Parity::even, Parity::odd}) {
        CHECK(identity_deviation(gram_matrix_1d(model, s, 6, kRest)) <= 1e-10);
        CHECK(identity_deviation(gram_matrix_1d(model, s, 6, kMoving)) <= 1e-10);
      }
    }
    CHECK_THROWS_AS(gram_matrix_1d(Dunkl1DModel(0.0), Parity::even, -1, kRest), DomainError);

    const Dunkl3DModel model({0.3, 0.5, 0.2});
    const std::vector<StateSpec3D> states{
        {0, HalfInteger::integer(0), HalfInteger::integer(0), {Parity::even, Parity::even, Parity::even}},
        {1, HalfInteger::integer(0), HalfInteger::integer(0), {Parity::even, Parity::even, Parity::even}},
        {0, HalfInteger::integer(1), HalfInteger::integer(1), {Parity::even, Parity::even, Parity::even}},
        {0, HalfInteger::from_twice(1), HalfInteger::from_twice(3), {Parity::even, Parity::odd, Parity::odd}},
    };
    CHECK(identity_deviation(gram_matrix_3d(model, states, kRest)) <= 1e-8);
    CHECK(identity_deviation(gram_matrix_3d(model, states, kMoving)) <= 1e-8);
  }

  TEST_CASE("invariant drift of exact samples is negligible") {
    const Dunkl1DModel model(0.5);
    const auto trajectory = breathing_trajectory(2.0);
    const auto grid = auto_grid(model, Parity::even, 1, trajectory, 0.01);
    std::vector<Snapshot> series;
    for (int k = 0; k <= 8; ++k) {
      const double t = 0.25 * k;
      series.push_back({static_cast<std::size_t>(k), t, sample_state(model, {1, Parity::even}, grid, trajectory.at(t))});
    }
    const auto report = invariant_expectation_drift(series, model, Parity::even, trajectory);
    CHECK(report.name == "invariant-drift");
    CHECK(report.passed);
    CHECK(report.value < 1e-6);
    CHECK_THROWS_AS(invariant_expectation_drift(std::span<const Snapshot>{}, model, Parity::even, trajectory),
                    DomainError);
  }
}
