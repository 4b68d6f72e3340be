#include "dunkl/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "dunkl/errors.hpp"

namespace dunkl::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ConfigError(path + ": " + reason);
}

// Reads keys of one table and rejects any key it was not asked about.
class TableReader {
 public:
  TableReader(const toml::table& table, std::string path) : table_(table), path_(std::move(path)) {}

  std::string key_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const toml::node* node(std::string_view key) {
    seen_.insert(std::string(key));
    return table_.get(key);
  }

  bool has(std::string_view key) const { return table_.contains(key); }

  std::optional<double> real(std::string_view key) {
    const auto* n = node(key);
    if (!n) return std::nullopt;
    if (n->is_integer()) return static_cast<double>(n->as_integer()->get());
    if (n->is_floating_point()) {
      const double v = n->as_floating_point()->get();
      if (!std::isfinite(v)) fail(key_path(key), "must be finite");
      return v;
    }
    fail(key_path(key), "expected a number");
  }

  double real_or(std::string_view key, double fallback) { return real(key).value_or(fallback); }

  double required_real(std::string_view key) {
    const auto v = real(key);
    if (!v) fail(key_path(key), "missing required number");
    return *v;
  }

  std::optional<std::int64_t> integer(std::string_view key) {
    const auto* n = node(key);
    if (!n) return std::nullopt;
    if (!n->is_integer()) fail(key_path(key), "expected an integer");
    return n->as_integer()->get();
  }

  std::optional<std::string> string(std::string_view key) {
    const auto* n = node(key);
    if (!n) return std::nullopt;
    if (!n->is_string()) fail(key_path(key), "expected a string");
    return n->as_string()->get();
  }

  std::vector<double> real_array(std::string_view key) {
    const auto* n = node(key);
    if (!n) return {};
    const auto* arr = n->as_array();
    if (!arr) fail(key_path(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const auto& item = *arr->get(i);
      if (item.is_integer()) {
        out.push_back(static_cast<double>(item.as_integer()->get()));
      } else if (item.is_floating_point()) {
        out.push_back(item.as_floating_point()->get());
      } else {
        fail(key_path(key) + "[" + std::to_string(i) + "]", "expected a number");
      }
    }
    return out;
  }

  void finish() const {
    for (const auto& [k, v] : table_) {
      if (!seen_.contains(std::string(k.str()))) fail(key_path(k.str()), "unknown key");
    }
  }

 private:
  const toml::table& table_;
  std::string path_;
  std::set<std::string> seen_;
};

const toml::table* subtable(const toml::table& root, std::string_view key) {
  const auto* n = root.get(key);
  if (!n) return nullptr;
  if (!n->is_table()) fail(std::string(key), "expected a table");
  return n->as_table();
}

dynamics::TimeProfile parse_profile(const toml::node* n, const std::string& path) {
  if (!n) fail(path, "missing profile table");
  const auto* t = n->as_table();
  if (!t) fail(path, "expected a profile table such as { kind = \"constant\", c = 1.0 }");
  TableReader r(*t, path);
  const auto kind = r.string("kind");
  if (!kind) fail(path + ".kind", "missing profile kind");
  dynamics::TimeProfile out;
  if (*kind == "constant") {
    out = dynamics::Constant{r.required_real("c")};
  } else if (*kind == "linear") {
    out = dynamics::Linear{r.required_real("c0"), r.required_real("rate")};
  } else if (*kind == "exponential") {
    out = dynamics::Exponential{r.required_real("c0"), r.required_real("gamma")};
  } else if (*kind == "sinusoidal") {
    out = dynamics::Sinusoidal{r.required_real("c0"), r.required_real("amplitude"), r.required_real("rate")};
  } else if (*kind == "tabulated") {
    try {
      out = dynamics::Tabulated(r.real_array("times"), r.real_array("values"));
    } catch (const DomainError& e) {
      fail(path, e.what());
    }
  } else {
    fail(path + ".kind", "unknown profile kind '" + *kind +
                             "' (expected constant, linear, exponential, sinusoidal or tabulated)");
  }
  r.finish();
  return out;
}

HalfInteger parse_half_integer(const toml::node* n, const std::string& path) {
  if (!n) fail(path, "missing quantum number");
  try {
    if (n->is_integer()) return HalfInteger::integer(static_cast<int>(n->as_integer()->get()));
    if (n->is_floating_point()) return HalfInteger::from_double(n->as_floating_point()->get());
    if (n->is_string()) {
      const std::string s = n->as_string()->get();
      if (const auto slash = s.find('/'); slash != std::string::npos) {
        if (s.substr(slash + 1) != "2") fail(path, "fractions must have denominator 2, got '" + s + "'");
        return HalfInteger::from_twice(std::stoi(s.substr(0, slash)));
      }
      return HalfInteger::integer(std::stoi(s));
    }
  } catch (const DomainError& e) {
    fail(path, e.what());
  } catch (const std::logic_error&) {
    fail(path, "cannot read a half-integer");
  }
  fail(path, "expected an integer, a half-integer number or a fraction string like \"3/2\"");
}

Parity parse_parity(const toml::node* n, const std::string& path) {
  if (!n || !n->is_integer()) fail(path, "expected parity +1 or -1");
  const auto v = n->as_integer()->get();
  if (v != 1 && v != -1) fail(path, "parity must be +1 or -1, got " + std::to_string(v));
  return parity_from_sign(static_cast<int>(v));
}

ScenarioConfig parse_scenario(const toml::table& root) {
  ScenarioConfig out;
  const auto* t = subtable(root, "scenario");
  if (!t) fail("scenario", "missing [scenario] section");
  TableReader r(*t, "scenario");
  out.hbar = r.real_or("hbar", 1.0);
  if (!(out.hbar > 0.0)) fail("scenario.hbar", "must be positive");
  out.t_end = r.real_or("t_end", 10.0);
  if (!(out.t_end > 0.0)) fail("scenario.t_end", "must be positive");
  out.mass = parse_profile(r.node("mass"), "scenario.mass");
  out.frequency = parse_profile(r.node("frequency"), "scenario.frequency");
  if (const auto form = r.string("frequency_form")) {
    if (*form == "omega") {
      out.frequency_form = dynamics::FrequencyForm::omega;
    } else if (*form == "omega_squared") {
      out.frequency_form = dynamics::FrequencyForm::omega_squared;
    } else {
      fail("scenario.frequency_form", "expected \"omega\" or \"omega_squared\"");
    }
  }
  out.rho0 = r.real("rho0");
  out.rho_dot0 = r.real("rho_dot0");
  if (out.rho0 && !(*out.rho0 > 0.0)) fail("scenario.rho0", "must be positive");
  r.finish();
  try {
    (void)out.build();
  } catch (const DomainError& e) {
    fail("scenario", e.what());
  }
  return out;
}

ModelConfig parse_model(const toml::table& root) {
  ModelConfig out;
  const auto* t = subtable(root, "model");
  if (!t) fail("model", "missing [model] section");
  TableReader r(*t, "model");
  const auto dim = r.string("dimension");
  if (!dim) fail("model.dimension", "missing dimension tag (\"1d\" or \"3d\")");
  if (*dim == "1d") {
    out.dimension = Dimension::one;
    out.mu[0] = r.real_or("mu", 0.0);
    if (!(out.mu[0] > -0.5)) {
      fail("model.mu", "must satisfy mu > -1/2 (normalizability), got " + std::to_string(out.mu[0]));
    }
  } else if (*dim == "3d") {
    out.dimension = Dimension::three;
    if (r.has("mu")) {
      const auto mu = r.real_array("mu");
      if (mu.size() != 3) fail("model.mu", "expected three Wigner parameters [mu1, mu2, mu3]");
      for (std::size_t i = 0; i < 3; ++i) {
        if (!(mu[i] >= 0.0)) {
          fail("model.mu[" + std::to_string(i) + "]", "must satisfy mu >= 0, got " + std::to_string(mu[i]));
        }
        out.mu[i] = mu[i];
      }
    }
  } else {
    fail("model.dimension", "expected \"1d\" or \"3d\", got '" + *dim + "'");
  }
  r.finish();
  return out;
}

StateSpec parse_state(const toml::table& t, const std::string& path, Dimension dim) {
  TableReader r(t, path);
  if (dim == Dimension::one) {
    StateSpec1D spec;
    const auto n = r.integer("n");
    if (!n) fail(path + ".n", "missing radial quantum number");
    if (*n < 0 || *n > 200) fail(path + ".n", "must lie in [0, 200]");
    spec.n = static_cast<int>(*n);
    spec.s = parse_parity(r.node("s"), path + ".s");
    r.finish();
    return spec;
  }
  StateSpec3D spec;
  const auto n_r = r.integer("n_r");
  if (!n_r) fail(path + ".n_r", "missing radial quantum number");
  if (*n_r < 0 || *n_r > 200) fail(path + ".n_r", "must lie in [0, 200]");
  spec.n_r = static_cast<int>(*n_r);
  spec.l = parse_half_integer(r.node("l"), path + ".l");
  spec.m = parse_half_integer(r.node("m"), path + ".m");
  const auto* s = r.node("s");
  const auto* arr = s ? s->as_array() : nullptr;
  if (!arr || arr->size() != 3) fail(path + ".s", "expected three parities [s1, s2, s3]");
  for (std::size_t i = 0; i < 3; ++i) spec.s[i] = parse_parity(arr->get(i), path + ".s[" + std::to_string(i) + "]");
  r.finish();
  try {
    validate(spec);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  return spec;
}

std::vector<StateSpec> parse_states(const toml::table& root, Dimension dim) {
  const auto* n = root.get("states");
  if (!n) fail("states", "at least one [[states]] entry is required");
  const auto* arr = n->as_array();
  if (!arr) fail("states", "expected an array of tables ([[states]])");
  std::vector<StateSpec> out;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const auto path = "states[" + std::to_string(i) + "]";
    const auto* t = arr->get(i)->as_table();
    if (!t) fail(path, "expected a table");
    out.push_back(parse_state(*t, path, dim));
  }
  if (out.empty()) fail("states", "at least one state is required");
  return out;
}

GridConfig parse_grid(const toml::table& root) {
  GridConfig out;
  const auto* t = subtable(root, "grid");
  if (!t) return out;
  TableReader r(*t, "grid");
  if (const auto* n = r.node("x_max")) {
    if (n->is_string()) {
      if (n->as_string()->get() != "auto") fail("grid.x_max", "expected a positive number or \"auto\"");
    } else {
      out.x_max = r.real("x_max");
      if (!(*out.x_max > 0.0)) fail("grid.x_max", "must be positive");
    }
  }
  if (const auto v = r.integer("n_points")) {
    if (*v < 16) fail("grid.n_points", "grid too coarse: need at least 16 points");
    out.n_points = static_cast<std::size_t>(*v);
  }
  out.spacing = r.real_or("spacing", out.spacing);
  if (!(out.spacing > 0.0)) fail("grid.spacing", "must be positive");
  if (const auto v = r.integer("n_theta")) {
    if (*v < 1) fail("grid.n_theta", "must be positive");
    out.n_theta = static_cast<std::size_t>(*v);
  }
  if (const auto v = r.integer("n_phi")) {
    if (*v < 1) fail("grid.n_phi", "must be positive");
    out.n_phi = static_cast<std::size_t>(*v);
  }
  r.finish();
  return out;
}

std::optional<PropagatorConfig> parse_propagator(const toml::table& root) {
  const auto* t = subtable(root, "propagator");
  if (!t || t->empty()) return std::nullopt;
  PropagatorConfig out;
  TableReader r(*t, "propagator");
  out.dt = r.real_or("dt", out.dt);
  if (!(out.dt > 0.0)) fail("propagator.dt", "must be positive");
  if (const auto v = r.integer("n_steps")) {
    if (*v < 1) fail("propagator.n_steps", "must be positive");
    out.n_steps = static_cast<std::size_t>(*v);
  }
  r.finish();
  return out;
}

OutputConfig parse_outputs(const toml::table& root, double t_end) {
  OutputConfig out;
  out.time_samples = {0.0, t_end};
  const auto* t = subtable(root, "outputs");
  if (!t) return out;
  TableReader r(*t, "outputs");
  if (const auto dir = r.string("directory")) out.directory = *dir;
  if (const auto* n = r.node("formats")) {
    const auto* arr = n->as_array();
    if (!arr) fail("outputs.formats", "expected an array of strings");
    out.csv = out.json = false;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const auto* s = arr->get(i)->as_string();
      const auto path = "outputs.formats[" + std::to_string(i) + "]";
      if (!s) fail(path, "expected a string");
      if (s->get() == "csv") {
        out.csv = true;
      } else if (s->get() == "json") {
        out.json = true;
      } else {
        fail(path, "unknown format '" + s->get() + "' (expected csv or json)");
      }
    }
  }
  if (r.has("time_samples")) {
    out.time_samples = r.real_array("time_samples");
    if (out.time_samples.empty()) fail("outputs.time_samples", "must not be empty");
    for (std::size_t i = 0; i < out.time_samples.size(); ++i) {
      const double ts = out.time_samples[i];
      if (!(ts >= 0.0 && ts <= t_end)) {
        fail("outputs.time_samples[" + std::to_string(i) + "]", "must lie in [0, scenario.t_end]");
      }
    }
  }
  r.finish();
  return out;
}

}  // namespace

dynamics::Scenario ScenarioConfig::build() const {
  return dynamics::Scenario(mass, frequency, frequency_form, hbar, t_end);
}

dynamics::PinneyOptions ScenarioConfig::pinney_options() const {
  auto options = dynamics::default_pinney_options(build());
  if (rho0) options.rho0 = *rho0;
  if (rho_dot0) options.rho_dot0 = *rho_dot0;
  return options;
}

RunConfig parse_config(std::string_view text, std::string_view source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    const auto& begin = e.source().begin;
    throw ConfigError(std::string(source) + ":" + std::to_string(begin.line) + ":" + std::to_string(begin.column) +
                      ": parse error: " + std::string(e.description()));
  }
  static const std::set<std::string> kSections{"scenario", "model", "states", "grid", "propagator", "outputs"};
  for (const auto& [k, v] : root) {
    if (!kSections.contains(std::string(k.str()))) fail(std::string(k.str()), "unknown section");
  }

  RunConfig out;
  out.scenario = parse_scenario(root);
  out.model = parse_model(root);
  out.states = parse_states(root, out.model.dimension);
  out.grid = parse_grid(root);
  out.propagator = parse_propagator(root);
  out.outputs = parse_outputs(root, out.scenario.t_end);

  if (out.propagator) {
    if (out.model.dimension == Dimension::three) {
      fail("propagator", "propagation is only available for 1d models");
    }
    const auto s0 = std::get<StateSpec1D>(out.states.front()).s;
    for (std::size_t i = 1; i < out.states.size(); ++i) {
      if (std::get<StateSpec1D>(out.states[i]).s != s0) {
        fail("states[" + std::to_string(i) + "].s", "propagated states must share one parity sector");
      }
    }
    const double t_final = out.propagator->dt * static_cast<double>(out.propagator->n_steps);
    if (t_final > out.scenario.t_end * (1.0 + 1e-12)) {
      fail("propagator", "dt * n_steps exceeds scenario.t_end");
    }
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

std::string state_label(const StateSpec& state) {
  if (const auto* s1 = std::get_if<StateSpec1D>(&state)) {
    return "n" + std::to_string(s1->n) + "s" + parity_char(s1->s);
  }
  const auto& s3 = std::get<StateSpec3D>(state);
  return "nr" + std::to_string(s3.n_r) + "_l" + s3.l.to_string() + "_m" + s3.m.to_string() + "_s" +
         parity_char(s3.s[0]) + parity_char(s3.s[1]) + parity_char(s3.s[2]);
}

std::string file_label(const StateSpec& state) {
  std::string out;
  for (const char c : state_label(state)) {
    if (c == '/') {
      out += "over";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace dunkl::cli
