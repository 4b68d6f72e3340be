#include "dunkl/oracle/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/oracle/operators.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::oracle {

namespace {

double squared_norm(const std::vector<Complex>& v, std::size_t begin, std::size_t end) {
  double out = 0.0;
  for (std::size_t j = begin; j < end; ++j) out += std::norm(v[j]);
  return out;
}

double relative_l2(const std::vector<Complex>& residual, const std::vector<Complex>& reference) {
  const double ref = squared_norm(reference, 0, reference.size());
  return std::sqrt(squared_norm(residual, 0, residual.size()) / ref);
}

std::string state_context(const StateSpec1D& spec) {
  return "n=" + std::to_string(spec.n) + ",s=" + parity_char(spec.s);
}

}  // namespace

Complex weighted_inner_product(const DiscreteField& f, const DiscreteField& g) {
  if (!(f.grid == g.grid)) throw DomainError("weighted_inner_product: fields live on different grids");
  Complex sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += std::conj(f.values[j]) * g.values[j];
  return 2.0 * f.grid.h() * sum;
}

double fidelity(const DiscreteField& f, const DiscreteField& g) {
  const double nf = std::sqrt(weighted_inner_product(f, f).real());
  const double ng = std::sqrt(weighted_inner_product(g, g).real());
  constexpr double kNormTolerance = 1e-3;
  if (std::abs(nf - 1.0) > kNormTolerance || std::abs(ng - 1.0) > kNormTolerance) {
    throw DomainError("fidelity: inputs must be normalized (norms " + std::to_string(nf) + ", " +
                      std::to_string(ng) + ")");
  }
  return std::min(1.0, std::abs(weighted_inner_product(f, g)) / (nf * ng));
}

SpatialGrid1D auto_grid(const Dunkl1DModel& model, Parity s, int n_max, const dynamics::PinneyTrajectory& trajectory,
                        double h) {
  const auto rho = trajectory.rho();
  const double rho_max = *std::max_element(rho.begin(), rho.end());
  return SpatialGrid1D::with_spacing(h, auto_extent(rho_max, model.hbar(), n_max, nu(model, s)));
}

ResidualReport schrodinger_residual_1d(const Dunkl1DModel& model, const StateSpec1D& spec,
                                       const dynamics::PinneyTrajectory& trajectory, std::span<const double> t_samples,
                                       const SpatialGrid1D& grid, double dt, double tolerance) {
  const double hbar = model.hbar();
  const auto& scenario = trajectory.scenario();
  double worst = 0.0;
  double worst_t = 0.0;
  for (const double t : t_samples) {
    if (t - 2.0 * dt < 0.0 || t + 2.0 * dt > trajectory.t_end()) {
      throw DomainError("schrodinger_residual_1d: t=" + std::to_string(t) + " too close to the trajectory ends");
    }
    const auto at = [&](double tt) { return sample_state(model, spec, grid, trajectory.at(tt)); };
    const auto m2 = at(t - 2.0 * dt), m1 = at(t - dt), p1 = at(t + dt), p2 = at(t + 2.0 * dt);
    const auto phi = at(t);
    const auto h_phi = apply_parity_hamiltonian(phi, model, spec.s, scenario.mass(t).value, scenario.omega_sq(t));
    std::vector<Complex> residual(grid.size());
    const Complex i_hbar(0.0, hbar);
    for (std::size_t j = 0; j < residual.size(); ++j) {
      const Complex dphi =
          (m2.values[j] - 8.0 * m1.values[j] + 8.0 * p1.values[j] - p2.values[j]) / (12.0 * dt);
      residual[j] = i_hbar * dphi - h_phi.values[j];
    }
    const double value = relative_l2(residual, phi.values);
    if (value > worst || !std::isfinite(value)) {
      worst = value;
      worst_t = t;
    }
  }
  return ResidualReport::make("schrodinger-residual", worst, tolerance,
                              {{"state", state_context(spec)},
                               {"mu", model.mu()},
                               {"h", grid.h()},
                               {"x_max", grid.x_max()},
                               {"dt", dt},
                               {"worst_t", worst_t}});
}

ResidualReport invariant_eigen_residual_1d(const Dunkl1DModel& model, const StateSpec1D& spec,
                                           const dynamics::PinneyTrajectory& trajectory,
                                           std::span<const double> t_samples, const SpatialGrid1D& grid,
                                           double tolerance) {
  const double lambda = eigenvalue_1d(model, spec);
  double worst = 0.0;
  double worst_t = 0.0;
  for (const double t : t_samples) {
    const auto point = trajectory.at(t);
    const auto phi = sample_state(model, spec, grid, point, false);
    const auto i_phi = apply_invariant_1d(phi, model, spec.s, point);
    std::vector<Complex> residual(grid.size());
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] = i_phi.values[j] - lambda * phi.values[j];
    const double value = relative_l2(residual, phi.values);
    if (value > worst || !std::isfinite(value)) {
      worst = value;
      worst_t = t;
    }
  }
  return ResidualReport::make("invariant-eigenresidual", worst, tolerance,
                              {{"state", state_context(spec)},
                               {"mu", model.mu()},
                               {"lambda", lambda},
                               {"h", grid.h()},
                               {"worst_t", worst_t}});
}

double invariant_expectation(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                             const dynamics::TrajectoryPoint& at) {
  const auto i_phi = apply_invariant_1d(field, model, s, at);
  return weighted_inner_product(field, i_phi).real() / weighted_inner_product(field, field).real();
}

ResidualReport invariant_expectation_drift(std::span<const Snapshot> series, const Dunkl1DModel& model, Parity s,
                                           const dynamics::PinneyTrajectory& trajectory, double tolerance) {
  if (series.empty()) throw DomainError("invariant_expectation_drift: empty series");
  const double i0 = invariant_expectation(series.front().field, model, s, trajectory.at(series.front().t));
  double worst = 0.0;
  for (const auto& snap : series) {
    const double ik = invariant_expectation(snap.field, model, s, trajectory.at(snap.t));
    worst = std::max(worst, std::abs(ik - i0) / std::abs(i0));
  }
  return ResidualReport::make("invariant-drift", worst, tolerance,
                              {{"initial_expectation", i0},
                               {"snapshots", static_cast<std::int64_t>(series.size())},
                               {"t_end", series.back().t}});
}

Eigen::MatrixXcd gram_matrix_1d(const Dunkl1DModel& model, Parity s, int n_max, const dynamics::TrajectoryPoint& at) {
  if (n_max < 0) throw DomainError("gram_matrix_1d: n_max must be non-negative");
  // u = x^2/(hbar rho^2) maps the half line to the generalized Laguerre weight
  // u^nu e^{-u}; the integrand divided by that weight is a polynomial.
  const double hbar = model.hbar();
  const double v = nu(model, s);
  const auto rule = specfun::gauss_laguerre(n_max + 8, v);
  const int size = n_max + 1;
  const std::size_t nodes = rule.size();
  Eigen::MatrixXcd values(size, static_cast<Eigen::Index>(nodes));
  std::vector<double> jacobian(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double u = rule.nodes[k];
    const double x = at.rho * std::sqrt(hbar * u);
    const double dx_du = at.rho * std::sqrt(hbar) / (2.0 * std::sqrt(u));
    // 2 for the full line, |x|^{2 mu}, dx/du, and the Laguerre weight removed.
    jacobian[k] = 2.0 * std::pow(x, 2.0 * model.mu()) * dx_du / (std::pow(u, v) * std::exp(-u));
    for (int n = 0; n < size; ++n) {
      values(n, static_cast<Eigen::Index>(k)) = eigenfunction_1d(model, {n, s}, x, at).value;
    }
  }
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(size, size);
  for (std::size_t k = 0; k < nodes; ++k) {
    const auto col = values.col(static_cast<Eigen::Index>(k));
    gram += (rule.weights[k] * jacobian[k]) * (col.conjugate() * col.transpose());
  }
  return gram;
}

Eigen::MatrixXcd gram_matrix_3d(const Dunkl3DModel& model, std::span<const StateSpec3D> states,
                                const dynamics::TrajectoryPoint& at) {
  // The integrand factorizes state by state, so the tensor-product sum equals
  // the product of three one-dimensional sums.
  const auto& mu = model.mu();
  const double hbar = model.hbar();
  const double delta = model.delta();
  const auto count = static_cast<Eigen::Index>(states.size());

  double extent = 0.0;
  for (const auto& st : states) {
    const double sigma = separation_constants(model, st).sigma;
    extent = std::max(extent, at.rho * std::sqrt(hbar * (4.0 * st.n_r + 2.0 * sigma + 150.0)));
  }
  const auto radial_rule = specfun::tanh_sinh(0.0, extent, 1.0 / 64.0, 256);

  const auto concat = [](std::initializer_list<specfun::QuadratureRule> parts) {
    specfun::QuadratureRule out;
    for (const auto& p : parts) {
      out.nodes.insert(out.nodes.end(), p.nodes.begin(), p.nodes.end());
      out.weights.insert(out.weights.end(), p.weights.begin(), p.weights.end());
    }
    return out;
  };
  constexpr double pi = std::numbers::pi;
  const auto polar_rule = concat({specfun::tanh_sinh(0.0, pi / 2), specfun::tanh_sinh(pi / 2, pi)});
  const auto azimuthal_rule = concat({specfun::tanh_sinh(0.0, pi / 2), specfun::tanh_sinh(pi / 2, pi),
                                      specfun::tanh_sinh(pi, 1.5 * pi), specfun::tanh_sinh(1.5 * pi, 2.0 * pi)});

  const auto power = [](double base, double e) { return e == 0.0 ? 1.0 : std::pow(std::abs(base), e); };

  Eigen::MatrixXcd radial = Eigen::MatrixXcd::Zero(count, count);
  Eigen::MatrixXcd polar = Eigen::MatrixXcd::Zero(count, count);
  Eigen::MatrixXcd azimuthal = Eigen::MatrixXcd::Zero(count, count);
  Eigen::VectorXcd col(count);

  for (std::size_t k = 0; k < radial_rule.size(); ++k) {
    const double r = radial_rule.nodes[k];
    const double chirp = at.mass * at.rho_dot * r * r / (2.0 * hbar * at.rho);
    for (Eigen::Index i = 0; i < count; ++i) {
      const auto& st = states[static_cast<std::size_t>(i)];
      col(i) = std::polar(1.0, chirp + phase_3d(model, st, at)) * std::pow(at.rho, -0.5) * std::pow(r, -delta) *
               radial_eigenfunction(model, st, r / at.rho);
    }
    radial += (radial_rule.weights[k] * std::pow(r, 2.0 * delta)) * (col.conjugate() * col.transpose());
  }
  for (std::size_t k = 0; k < polar_rule.size(); ++k) {
    const double th = polar_rule.nodes[k];
    const double w = power(std::sin(th), 2.0 * (mu[0] + mu[1])) * power(std::cos(th), 2.0 * mu[2]) * std::sin(th);
    for (Eigen::Index i = 0; i < count; ++i) {
      col(i) = polar_eigenfunction(model, states[static_cast<std::size_t>(i)], th).value;
    }
    polar += (polar_rule.weights[k] * w) * (col.conjugate() * col.transpose());
  }
  for (std::size_t k = 0; k < azimuthal_rule.size(); ++k) {
    const double ph = azimuthal_rule.nodes[k];
    const double w = power(std::sin(ph), 2.0 * mu[1]) * power(std::cos(ph), 2.0 * mu[0]);
    for (Eigen::Index i = 0; i < count; ++i) {
      col(i) = azimuthal_eigenfunction(model, states[static_cast<std::size_t>(i)], ph).value;
    }
    azimuthal += (azimuthal_rule.weights[k] * w) * (col.conjugate() * col.transpose());
  }
  return radial.cwiseProduct(polar).cwiseProduct(azimuthal);
}

double identity_deviation(const Eigen::MatrixXcd& gram) {
  const auto n = gram.rows();
  return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

ResidualReport angular_residual(const Dunkl3DModel& model, const StateSpec3D& spec, AngularFactor which, int n_nodes,
                                double tolerance) {
  if (n_nodes < 32) throw DomainError("angular_residual: need at least 32 nodes");
  constexpr double pi = std::numbers::pi;
  const auto& mu = model.mu();
  const auto sep = separation_constants(model, spec);
  const bool azimuthal = which == AngularFactor::azimuthal;
  const double span = azimuthal ? 2.0 * pi : pi;
  const double margin = pi / (4.0 * n_nodes);
  const double a1 = 1.0 - sign(spec.s[0]);
  const double a2 = 1.0 - sign(spec.s[1]);
  const double a3 = 1.0 - sign(spec.s[2]);

  double worst = 0.0;
  double scale = 0.0;
  int used = 0;
  for (int k = 0; k < n_nodes; ++k) {
    const double x = (k + 0.5) * span / n_nodes;
    const double quarter = x / (0.5 * pi);
    if (std::abs(quarter - std::round(quarter)) * 0.5 * pi < margin) continue;
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cot = c / s;
    const double tan = s / c;
    AngularEval f{};
    double c1 = 0.0;
    double terms[3] = {0.0, 0.0, 0.0};  // the three potential-like coefficients
    double eigen = 0.0;
    if (azimuthal) {
      f = azimuthal_eigenfunction(model, spec, x);
      c1 = 2.0 * (mu[1] * cot - mu[0] * tan);
      terms[0] = -mu[0] * a1 / (c * c);
      terms[1] = -mu[1] * a2 / (s * s);
      eigen = sep.k_sq;
    } else {
      f = polar_eigenfunction(model, spec, x);
      c1 = 2.0 * ((0.5 + mu[0] + mu[1]) * cot - mu[2] * tan);
      terms[0] = -mu[2] * a3 / (c * c);
      terms[1] = -sep.k_sq / (s * s);
      eigen = sep.q_sq;
    }
    const double residual = f.d2 + c1 * f.d1 + (terms[0] + terms[1] + terms[2] + eigen) * f.value;
    const double magnitude = std::abs(f.d2) + std::abs(c1 * f.d1) +
                             (std::abs(terms[0]) + std::abs(terms[1]) + std::abs(eigen)) * std::abs(f.value);
    worst = std::max(worst, std::abs(residual));
    scale = std::max(scale, magnitude);
    ++used;
  }
  const double value = scale > 0.0 ? worst / scale : worst;
  const std::string label = "nr" + std::to_string(spec.n_r) + "_l" + spec.l.to_string() + "_m" + spec.m.to_string() +
                            "_s" + parity_char(spec.s[0]) + parity_char(spec.s[1]) + parity_char(spec.s[2]);
  return ResidualReport::make(azimuthal ? "angular-residual-azimuthal" : "angular-residual-polar", value, tolerance,
                              {{"state", label},
                               {"mu1", mu[0]},
                               {"mu2", mu[1]},
                               {"mu3", mu[2]},
                               {"nodes", static_cast<std::int64_t>(used)},
                               {"max_abs_residual", worst}});
}

ResidualReport commutator_check(Commutator which, const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                double tolerance, std::size_t band) {
  const double hbar = model.hbar();
  const auto t1 = [&](const DiscreteField& f) { return apply_t1(f, model, s); };
  const auto t2 = [&](const DiscreteField& f) { return apply_t2(f); };
  const auto t3 = [&](const DiscreteField& f) { return apply_t3(f, model, s); };

  DiscreteField lhs = DiscreteField::zeros(field.grid);
  DiscreteField rhs = DiscreteField::zeros(field.grid);
  std::string name;
  switch (which) {
    case Commutator::t1_t2:
      lhs = t1(t2(field)) - t2(t1(field));
      rhs = Complex(0.0, -2.0 * hbar) * t3(field);
      name = "commutator-t1-t2";
      break;
    case Commutator::t2_t3:
      lhs = t2(t3(field)) - t3(t2(field));
      rhs = Complex(0.0, 4.0 * hbar) * t2(field);
      name = "commutator-t2-t3";
      break;
    case Commutator::t1_t3:
      lhs = t1(t3(field)) - t3(t1(field));
      rhs = Complex(0.0, -4.0 * hbar) * t1(field);
      name = "commutator-t1-t3";
      break;
  }
  const std::size_t n = field.size();
  if (2 * band >= n) throw ConfigError("commutator_check: boundary band swallows the grid");
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t j = band; j < n - band; ++j) {
    diff += std::norm(lhs.values[j] - rhs.values[j]);
    ref += std::norm(rhs.values[j]);
  }
  const double value = ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
  return ResidualReport::make(name, value, tolerance,
                              {{"h", field.grid.h()}, {"band", static_cast<std::int64_t>(band)}, {"mu", model.mu()}});
}

DiscreteField gaussian_bump(const SpatialGrid1D& grid, double center, double width) {
  std::vector<Complex> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double d = grid.x(j) - center;
    v[j] = std::exp(-width * d * d);
  }
  return {grid, std::move(v)};
}

}  // namespace dunkl::oracle
