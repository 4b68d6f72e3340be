#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dunkl/dunkl1d.hpp"
#include "dunkl/dunkl3d.hpp"
#include "dunkl/dynamics.hpp"

namespace dunkl::cli {

enum class Dimension { one, three };

struct ScenarioConfig {
  dynamics::TimeProfile mass = dynamics::Constant{1.0};
  dynamics::TimeProfile frequency = dynamics::Constant{1.0};
  dynamics::FrequencyForm frequency_form = dynamics::FrequencyForm::omega;
  double hbar = 1.0;
  double t_end = 10.0;
  /// Initial data of the Ermakov-Pinney equation; equilibrium when absent.
  std::optional<double> rho0;
  std::optional<double> rho_dot0;

  dynamics::Scenario build() const;
  dynamics::PinneyOptions pinney_options() const;
};

struct ModelConfig {
  Dimension dimension = Dimension::one;
  std::array<double, 3> mu{0.0, 0.0, 0.0};  ///< mu[0] only in 1d
};

struct GridConfig {
  std::optional<double> x_max;  ///< auto when absent
  std::optional<std::size_t> n_points;
  double spacing = 0.01;  ///< used with auto n_points in 1d
  std::size_t n_theta = 16;
  std::size_t n_phi = 32;
};

struct PropagatorConfig {
  double dt = 1e-4;
  std::size_t n_steps = 10000;
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
  bool json = true;
  std::vector<double> time_samples;  ///< defaults to {0, t_end}
};

using StateSpec = std::variant<StateSpec1D, StateSpec3D>;

struct RunConfig {
  ScenarioConfig scenario;
  ModelConfig model;
  std::vector<StateSpec> states;
  GridConfig grid;
  std::optional<PropagatorConfig> propagator;
  OutputConfig outputs;

  Dunkl1DModel model_1d() const { return Dunkl1DModel(model.mu[0], scenario.hbar); }
  Dunkl3DModel model_3d() const { return Dunkl3DModel(model.mu, scenario.hbar); }
};

/// Parses and validates a TOML run document. Throws ConfigError whose message
/// names the key path (or line/column for syntax errors) and the violated rule.
RunConfig parse_config(std::string_view text, std::string_view source = "config");

/// Reads and parses a file.
RunConfig load_config(const std::string& path);

/// n<N>s<+|-> in 1d; nr<N>_l<L>_m<M>_s<+-+> in 3d with half-integers as fractions.
std::string state_label(const StateSpec& state);

/// Label made filesystem-safe ('/' spelled "over").
std::string file_label(const StateSpec& state);

}  // namespace dunkl::cli
