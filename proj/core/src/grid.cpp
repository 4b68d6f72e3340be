#include "dunkl/oracle/grid.hpp"

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl::oracle {

SpatialGrid1D::SpatialGrid1D(double x_max, std::size_t n_points) : x_max_(x_max), n_(n_points), h_(0.0) {
  if (n_points < kMinPoints) {
    throw ConfigError("grid too coarse: " + std::to_string(n_points) + " points, need at least " +
                      std::to_string(kMinPoints));
  }
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw ConfigError("grid x_max must be positive and finite");
  h_ = x_max / static_cast<double>(n_points);
}

SpatialGrid1D SpatialGrid1D::with_spacing(double h, double extent) {
  if (!(h > 0.0) || !(extent > 0.0)) throw ConfigError("grid spacing and extent must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(extent / h - 1e-9));
  return SpatialGrid1D(static_cast<double>(n) * h, n);
}

std::vector<double> SpatialGrid1D::points() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = x(j);
  return out;
}

double auto_extent(double rho_max, double hbar, int n_max, double nu) {
  return rho_max * std::sqrt(hbar * (4.0 * n_max + 4.0 * std::abs(nu) + 80.0));
}

DiscreteField::DiscreteField(SpatialGrid1D g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw DomainError("field length does not match its grid");
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw NumericalError("field contains non-finite values");
  }
}

DiscreteField DiscreteField::zeros(const SpatialGrid1D& g) { return {g, std::vector<Complex>(g.size())}; }

namespace {

void require_same_grid(const DiscreteField& a, const DiscreteField& b) {
  if (!(a.grid == b.grid)) throw DomainError("fields live on different grids");
}

}  // namespace

DiscreteField operator+(const DiscreteField& a, const DiscreteField& b) {
  require_same_grid(a, b);
  auto out = a.values;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += b.values[j];
  return {a.grid, std::move(out)};
}

DiscreteField operator-(const DiscreteField& a, const DiscreteField& b) {
  require_same_grid(a, b);
  auto out = a.values;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= b.values[j];
  return {a.grid, std::move(out)};
}

DiscreteField operator*(Complex c, const DiscreteField& a) {
  auto out = a.values;
  for (auto& z : out) z *= c;
  return {a.grid, std::move(out)};
}

ResidualReport ResidualReport::make(std::string name, double value, double tolerance,
                                    std::vector<std::pair<std::string, ContextValue>> context) {
  const bool passed = std::isfinite(value) && value <= tolerance;
  return {std::move(name), value, tolerance, passed, std::move(context)};
}

}  // namespace dunkl::oracle
