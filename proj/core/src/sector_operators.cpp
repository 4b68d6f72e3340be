#include "dunkl/oracle/operators.hpp"

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl::oracle {

namespace {

using Values = std::vector<Complex>;

struct ChiDerivatives {
  Values chi;
  Values d1;
  Values d2;
};

// chi = phi / x^a with fourth-order first and second derivatives. Ghosts:
// chi_{-1} = chi_0, chi_{-2} = chi_1 (even about the origin); zero past x_max.
ChiDerivatives chi_derivatives(const DiscreteField& field, double a) {
  const auto& grid = field.grid;
  const std::size_t n = grid.size();
  const double h = grid.h();
  ChiDerivatives out{Values(n), Values(n), Values(n)};
  for (std::size_t j = 0; j < n; ++j) out.chi[j] = field.values[j] / std::pow(grid.x(j), a);

  const auto e = [&](std::ptrdiff_t k) -> Complex {
    if (k < 0) return out.chi[static_cast<std::size_t>(-k - 1)];
    if (k >= static_cast<std::ptrdiff_t>(n)) return 0.0;
    return out.chi[static_cast<std::size_t>(k)];
  };
  const double c1 = 1.0 / (12.0 * h);
  const double c2 = 1.0 / (12.0 * h * h);
  for (std::size_t j = 0; j < n; ++j) {
    const auto k = static_cast<std::ptrdiff_t>(j);
    const Complex em2 = e(k - 2), em1 = e(k - 1), e0 = e(k), ep1 = e(k + 1), ep2 = e(k + 2);
    out.d1[j] = c1 * (em2 - 8.0 * em1 + 8.0 * ep1 - ep2);
    out.d2[j] = c2 * (-em2 + 16.0 * em1 - 30.0 * e0 + 16.0 * ep1 - ep2);
  }
  return out;
}

struct SectorTerms {
  Values t1;  // T1 chi
  Values t2;  // x^2 chi
  Values t3;  // T3 chi
};

SectorTerms sector_terms(const DiscreteField& field, const Dunkl1DModel& model, Parity s) {
  if (field.grid.size() < SpatialGrid1D::kMinPoints) throw ConfigError("grid too coarse for sector operators");
  const double a = sector_exponent(model, s);
  const double hbar = model.hbar();
  const auto d = chi_derivatives(field, a);
  const std::size_t n = field.grid.size();
  SectorTerms out{Values(n), Values(n), Values(n)};
  const Complex minus_i_hbar(0.0, -hbar);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = field.grid.x(j);
    out.t1[j] = -hbar * hbar * (d.d2[j] + 2.0 * a * d.d1[j] / x);
    out.t2[j] = x * x * d.chi[j];
    out.t3[j] = minus_i_hbar * (2.0 * x * d.d1[j] + (2.0 * a + 1.0) * d.chi[j]);
  }
  return out;
}

// Back to phi: multiply by x^a.
DiscreteField to_phi(const SpatialGrid1D& grid, Values chi_values, double a) {
  for (std::size_t j = 0; j < chi_values.size(); ++j) chi_values[j] *= std::pow(grid.x(j), a);
  return {grid, std::move(chi_values)};
}

template <class Combine>
DiscreteField combine(const DiscreteField& field, const Dunkl1DModel& model, Parity s, Combine&& f) {
  const auto terms = sector_terms(field, model, s);
  Values out(field.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f(terms.t1[j], terms.t2[j], terms.t3[j]);
  return to_phi(field.grid, std::move(out), sector_exponent(model, s));
}

}  // namespace

double sector_exponent(const Dunkl1DModel& model, Parity s) { return nu(model, s) + 0.5; }

DiscreteField gauge(const Dunkl1DModel& model, const DiscreteField& psi) {
  auto out = psi.values;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= std::pow(psi.grid.x(j), model.mu());
  return {psi.grid, std::move(out)};
}

DiscreteField ungauge(const Dunkl1DModel& model, const DiscreteField& phi) {
  auto out = phi.values;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] /= std::pow(phi.grid.x(j), model.mu());
  return {phi.grid, std::move(out)};
}

DiscreteField sample_state(const Dunkl1DModel& model, const StateSpec1D& spec, const SpatialGrid1D& grid,
                           const dynamics::TrajectoryPoint& at, bool include_phase) {
  Values out(grid.size());
  const Complex phase = include_phase ? std::polar(1.0, phase_1d(model, spec, at)) : Complex(1.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double x = grid.x(j);
    out[j] = phase * std::pow(x, model.mu()) * eigenfunction_1d(model, spec, x, at).value;
  }
  return {grid, std::move(out)};
}

DiscreteField apply_parity_hamiltonian(const DiscreteField& field, const Dunkl1DModel& model, Parity s, double mass,
                                       double omega_sq) {
  const double kinetic = 1.0 / (2.0 * mass);
  const double potential = 0.5 * mass * omega_sq;
  return combine(field, model, s, [&](Complex t1, Complex t2, Complex) { return kinetic * t1 + potential * t2; });
}

DiscreteField apply_invariant_1d(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                 const dynamics::TrajectoryPoint& at) {
  const auto c = dynamics::invariant_coefficients(at);
  return combine(field, model, s,
                 [&](Complex t1, Complex t2, Complex t3) { return 0.5 * (c.alpha * t1 + c.beta * t2 + c.gamma * t3); });
}

DiscreteField apply_transformed_invariant_1d(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                             double rho) {
  const double r2 = rho * rho;
  return combine(field, model, s, [&](Complex t1, Complex t2, Complex) { return 0.5 * (r2 * t1 + t2 / r2); });
}

DiscreteField apply_t1(const DiscreteField& field, const Dunkl1DModel& model, Parity s) {
  return combine(field, model, s, [](Complex t1, Complex, Complex) { return t1; });
}

DiscreteField apply_t2(const DiscreteField& field) {
  auto out = field.values;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= field.grid.x(j) * field.grid.x(j);
  return {field.grid, std::move(out)};
}

DiscreteField apply_t3(const DiscreteField& field, const Dunkl1DModel& model, Parity s) {
  return combine(field, model, s, [](Complex, Complex, Complex t3) { return t3; });
}

Tridiagonal propagator_hamiltonian(const SpatialGrid1D& grid, const Dunkl1DModel& model, Parity s, double mass,
                                   double omega_sq) {
  // Finite volumes for -(1/W) d/dx (W dchi/dx) with W = x^{2a}. The face weight
  // (2a+1) h sum_{k<=j} W_k / x_{j+1/2} approximates x_{j+1/2}^{2a} and makes the
  // scheme exact on chi = x^2; the flux through the origin vanishes. The
  // similarity transform to phi = x^a chi makes the matrix symmetric.
  const std::size_t n = grid.size();
  const double a = sector_exponent(model, s);
  const double h = grid.h();
  const double kinetic = model.hbar() * model.hbar() / (2.0 * mass);
  std::vector<double> w(n), face(n);
  double cumulative = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = std::pow(grid.x(j), 2.0 * a);
    cumulative += w[j];
    face[j] = (2.0 * a + 1.0) * h * cumulative / (grid.x(j) + 0.5 * h);
  }
  Tridiagonal out{std::vector<double>(n), std::vector<double>(n - 1)};
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.x(j);
    const double inner = j == 0 ? 0.0 : face[j - 1];
    out.diag[j] = kinetic * (face[j] + inner) / (w[j] * h * h) + 0.5 * mass * omega_sq * x * x;
    if (j + 1 < n) out.off[j] = -kinetic * face[j] / (h * h * std::sqrt(w[j] * w[j + 1]));
  }
  return out;
}

DiscreteField apply_propagator_hamiltonian(const DiscreteField& field, const Dunkl1DModel& model, Parity s,
                                           double mass, double omega_sq) {
  const auto op = propagator_hamiltonian(field.grid, model, s, mass, omega_sq);
  const auto& v = field.values;
  Values out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = op.diag[j] * v[j];
    if (j > 0) out[j] += op.off[j - 1] * v[j - 1];
    if (j + 1 < v.size()) out[j] += op.off[j] * v[j + 1];
  }
  return {field.grid, std::move(out)};
}

}  // namespace dunkl::oracle
