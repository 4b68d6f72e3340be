#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dunkl::oracle {

/// Uniform staggered half-line grid x_j = (j + 1/2) h, j = 0..n-1, with
/// n h = x_max. The origin is never a node.
class SpatialGrid1D {
 public:
  static constexpr std::size_t kMinPoints = 16;

  /// ConfigError when n_points < 16 or x_max is not positive.
  SpatialGrid1D(double x_max, std::size_t n_points);

  /// Smallest grid with spacing exactly h covering [0, extent].
  static SpatialGrid1D with_spacing(double h, double extent);

  double h() const noexcept { return h_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double x(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * h_; }
  std::vector<double> points() const;

  friend bool operator==(const SpatialGrid1D&, const SpatialGrid1D&) = default;

 private:
  double x_max_;
  std::size_t n_;
  double h_;
};

/// Extent rho_max sqrt(hbar (4 n_max + 4|nu| + 80)): the Gaussian tail of every
/// state with n <= n_max is far below double precision at the wall.
double auto_extent(double rho_max, double hbar, int n_max, double nu);

using Complex = std::complex<double>;

/// Gauged half-line field phi_j = x_j^mu psi(x_j).
struct DiscreteField {
  SpatialGrid1D grid;
  std::vector<Complex> values;

  DiscreteField(SpatialGrid1D g, std::vector<Complex> v);
  static DiscreteField zeros(const SpatialGrid1D& g);

  std::size_t size() const noexcept { return values.size(); }
};

DiscreteField operator+(const DiscreteField& a, const DiscreteField& b);
DiscreteField operator-(const DiscreteField& a, const DiscreteField& b);
DiscreteField operator*(Complex c, const DiscreteField& a);

using ContextValue = std::variant<std::string, double, std::int64_t>;

/// Outcome of one numerical check; passed is value <= tolerance.
struct ResidualReport {
  std::string name;
  double value;
  double tolerance;
  bool passed;
  std::vector<std::pair<std::string, ContextValue>> context;

  static ResidualReport make(std::string name, double value, double tolerance,
                             std::vector<std::pair<std::string, ContextValue>> context = {});
};

}  // namespace dunkl::oracle
