// Acceptance driver: one PASS/FAIL line per criterion, non-zero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "dunkl/cli/config.hpp"
#include "dunkl/cli/run.hpp"
#include "dunkl/dunkl1d.hpp"
#include "dunkl/dunkl3d.hpp"
#include "dunkl/dynamics.hpp"
#include "dunkl/oracle/checks.hpp"
#include "dunkl/oracle/operators.hpp"
#include "dunkl/oracle/propagator.hpp"
#include "dunkl/specfun.hpp"

namespace {

using namespace dunkl;
using dynamics::Scenario;
using oracle::Complex;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string check(bool& ok, std::string_view what, double value, double tolerance) {
  const bool pass = std::isfinite(value) && value <= tolerance;
  ok = ok && pass;
  return fmt::format("{}={:.3e}{}{:.0e}", what, value, pass ? "<=" : ">", tolerance);
}

std::vector<Scenario> residual_scenarios(double t_end) {
  return {
      Scenario::stationary(1.0, 1.0, 1.0, t_end),
      Scenario(dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0}, dynamics::FrequencyForm::omega, 1.0, t_end),
      Scenario(dynamics::Constant{1.0}, dynamics::Sinusoidal{1.0, 0.3, 1.0}, dynamics::FrequencyForm::omega_squared,
               1.0, t_end),
  };
}

dynamics::PinneyTrajectory solve(const Scenario& scenario) {
  return dynamics::solve_ermakov_pinney(scenario, dynamics::default_pinney_options(scenario));
}

constexpr double kMus[] = {0.0, 0.5, 1.5};
constexpr Parity kParities[] = {Parity::even, Parity::odd};

std::vector<double> interior_samples(double t_end) {
  std::vector<double> out;
  for (int k = 1; k <= 5; ++k) out.push_back(t_end * k / 6.0);
  return out;
}

Outcome pinney_stationarity() {
  const auto trajectory = solve(Scenario::stationary(1.0, 1.0, 1.0, 10.0));
  double worst = 0.0;
  for (const double r : trajectory.rho()) worst = std::max(worst, std::abs(r - 1.0));
  for (int k = 0; k <= 10000; ++k) worst = std::max(worst, std::abs(trajectory.at(k * 1e-3).rho - 1.0));
  bool ok = true;
  std::string d = check(ok, "max|rho-1|", worst, 1e-9);
  d += ", " + check(ok, "|Theta(10)-10|", std::abs(dynamics::phase_base(trajectory, 10.0) - 10.0), 1e-8);
  return {ok, d};
}

template <class Residual>
Outcome sector_residual_sweep(Residual&& residual) {
  double worst = 0.0;
  std::string where;
  int count = 0;
  for (const auto& scenario : residual_scenarios(3.0)) {
    const auto trajectory = solve(scenario);
    const auto times = interior_samples(trajectory.t_end());
    for (const double mu : kMus) {
      const Dunkl1DModel model(mu);
      for (const Parity s : kParities) {
        for (int n = 0; n <= 2; ++n) {
          const StateSpec1D spec{n, s};
          const auto grid = oracle::auto_grid(model, s, n, trajectory, 0.01);
          const auto report = residual(model, spec, trajectory, times, grid);
          ++count;
          if (!(report.value <= worst)) {
            worst = report.value;
            where = fmt::format("M={},mu={},n={},s={}", dynamics::profile_kind(scenario.mass_profile()), mu, n,
                                parity_char(s));
            if (dynamics::profile_kind(scenario.frequency_profile()) != "constant") where += ",omega^2 sinusoidal";
          }
        }
      }
    }
  }
  bool ok = true;
  std::string d = check(ok, "max residual", worst, 1e-4);
  return {ok, fmt::format("{} over {} (scenario,state) pairs; worst at {}", d, count, where)};
}

Outcome schrodinger_residuals() {
  return sector_residual_sweep([](const auto& model, const auto& spec, const auto& traj, const auto& times,
                                  const auto& grid) {
    return oracle::schrodinger_residual_1d(model, spec, traj, times, grid, 1e-3);
  });
}

Outcome invariant_eigenrelation() {
  return sector_residual_sweep([](const auto& model, const auto& spec, const auto& traj, const auto& times,
                                  const auto& grid) {
    return oracle::invariant_eigen_residual_1d(model, spec, traj, times, grid);
  });
}

oracle::DiscreteField superposition(const Dunkl1DModel& model, Parity s, std::initializer_list<int> ns,
                                    const oracle::SpatialGrid1D& grid, const dynamics::TrajectoryPoint& at) {
  auto field = oracle::DiscreteField::zeros(grid);
  const double scale = 1.0 / std::sqrt(static_cast<double>(ns.size()));
  for (const int n : ns) field = field + Complex(scale) * oracle::sample_state(model, {n, s}, grid, at);
  return field;
}

Outcome invariant_under_evolution() {
  const Scenario scenario(dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0}, dynamics::FrequencyForm::omega,
                          1.0, 2.0);
  const auto trajectory = solve(scenario);
  double drift = 0.0;
  double norm = 0.0;
  for (const double mu : kMus) {
    const Dunkl1DModel model(mu);
    for (const Parity s : kParities) {
      const auto grid = oracle::auto_grid(model, s, 1, trajectory, 0.01);
      const auto initial = superposition(model, s, {0, 1}, grid, trajectory.at(0.0));
      const auto series = oracle::crank_nicolson_propagate(initial, model, s, scenario, 1e-4, 20000, 100);
      drift = std::max(drift, oracle::invariant_expectation_drift(series, model, s, trajectory).value);
      const double n0 = oracle::weighted_inner_product(initial, initial).real();
      for (const auto& snap : series) {
        norm = std::max(norm, std::abs(oracle::weighted_inner_product(snap.field, snap.field).real() / n0 - 1.0));
      }
    }
  }
  bool ok = true;
  std::string d = check(ok, "<I> drift", drift, 1e-4);
  d += ", " + check(ok, "norm drift", norm, 1e-9);
  return {ok, d + " (mu in {0,0.5,1.5}, both parities, t<=2)"};
}

Outcome fidelity_vs_analytic() {
  const Dunkl1DModel model(0.5);
  double worst_loss = 0.0;
  double worst_phase = 0.0;
  const std::vector<Scenario> scenarios{
      Scenario::stationary(1.0, 1.0, 1.0, 1.0),
      Scenario(dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0}, dynamics::FrequencyForm::omega, 1.0, 1.0)};
  for (const auto& scenario : scenarios) {
    const auto trajectory = solve(scenario);
    for (const Parity s : kParities) {
      for (const int n : {0, 1}) {
        const auto grid = oracle::auto_grid(model, s, n, trajectory, 0.01);
        const auto initial = oracle::sample_state(model, {n, s}, grid, trajectory.at(0.0));
        const auto series = oracle::crank_nicolson_propagate(initial, model, s, scenario, 1e-4, 10000, 10000);
        const auto& final = series.back().field;
        const auto exact = oracle::sample_state(model, {n, s}, grid, trajectory.at(1.0));
        worst_loss = std::max(worst_loss, 1.0 - oracle::fidelity(exact, final));
        // The exact state carries exp(i eta); any leftover global phase is the phase error.
        worst_phase = std::max(worst_phase, std::abs(std::arg(oracle::weighted_inner_product(exact, final))));
      }
    }
  }
  bool ok = true;
  std::string d = check(ok, "1-|overlap|", worst_loss, 1e-4);
  d += ", " + check(ok, "|phase error|", worst_phase, 1e-3);
  return {ok, d};
}

Outcome orthonormality() {
  const auto trajectory = solve(Scenario(dynamics::Exponential{1.0, 0.2}, dynamics::Constant{1.0},
                                         dynamics::FrequencyForm::omega, 1.0, 2.0));
  double worst = 0.0;
  for (const double mu : {0.0, 0.25, 1.0, 2.5}) {
    for (const Parity s : kParities) {
      for (const double t : {0.0, 1.3}) {
        const auto gram = oracle::gram_matrix_1d(Dunkl1DModel(mu), s, 5, trajectory.at(t));
        worst = std::max(worst, oracle::identity_deviation(gram));
      }
    }
  }
  bool ok = true;
  const std::string d = check(ok, "max|G-1|", worst, 1e-8);
  return {ok, d + " (n,m<=5, t in {0,1.3})"};
}

Outcome hermite_reduction() {
  const Dunkl1DModel model(0.0);
  const dynamics::TrajectoryPoint rest{0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0};
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n) {
    for (const Parity s : kParities) {
      const int k = 2 * n + (s == Parity::odd ? 1 : 0);
      const double log_norm =
          -0.5 * (k * std::log(2.0) + specfun::log_gamma(k + 1.0) + 0.5 * std::log(std::numbers::pi));
      for (int i = -600; i <= 600; ++i) {
        const double x = i * 0.01;
        const double hermite_state = std::exp(log_norm - 0.5 * x * x) * specfun::hermite(k, x).value;
        const double sign_n = n % 2 == 0 ? 1.0 : -1.0;
        const auto dunkl_state = eigenfunction_1d(model, {n, s}, x, rest).value;
        worst = std::max(worst, std::abs(dunkl_state - sign_n * hermite_state));
      }
    }
  }
  bool ok = true;
  std::string d = check(ok, "max pointwise deviation", worst, 1e-9);
  return {ok, d + " (|x|<=6, n<=4)"};
}

std::vector<HalfInteger> ladder(int first_twice) {
  return {HalfInteger::from_twice(first_twice), HalfInteger::from_twice(first_twice + 2),
          HalfInteger::from_twice(first_twice + 4)};
}

Outcome angular_verification() {
  const std::array<std::array<double, 3>, 3> mus{{{0.0, 0.0, 0.0}, {0.3, 0.7, 0.2}, {0.5, 0.5, 0.5}}};
  double worst = 0.0;
  int count = 0;
  for (const auto& mu : mus) {
    const Dunkl3DModel model(mu);
    for (int bits = 0; bits < 8; ++bits) {
      const std::array<Parity, 3> s{(bits & 1) ? Parity::odd : Parity::even, (bits & 2) ? Parity::odd : Parity::even,
                                    (bits & 4) ? Parity::odd : Parity::even};
      const bool mixed = sign(s[0]) * sign(s[1]) == -1;
      const int m_first = mixed ? 1 : (s[0] == Parity::odd ? 2 : 0);
      const int l_first = s[2] == Parity::odd ? 1 : 0;
      for (const auto m : ladder(m_first)) {
        for (const auto l : ladder(l_first)) {
          const StateSpec3D spec{0, l, m, s};
          for (const auto which : {oracle::AngularFactor::azimuthal, oracle::AngularFactor::polar}) {
            worst = std::max(worst, oracle::angular_residual(model, spec, which, 64).value);
            ++count;
          }
        }
      }
    }
  }
  bool ok = true;
  std::string d = check(ok, "max scaled residual", worst, 1e-8);
  return {ok, fmt::format("{} over {} factor checks", d, count)};
}

Outcome spectrum_3d() {
  bool ok = true;
  const Dunkl3DModel ordinary({0.0, 0.0, 0.0});
  const StateSpec3D ground{0, HalfInteger::integer(0), HalfInteger::integer(0), {}};
  std::string d = check(ok, "|eps0-1.5|", std::abs(eigenvalue_3d(ordinary, ground) - 1.5), 1e-15);

  double spacing = 0.0;
  for (const double hbar : {1.0, 0.7}) {
    const Dunkl3DModel model({0.3, 0.7, 0.2}, hbar);
    for (int n_r = 0; n_r < 6; ++n_r) {
      const StateSpec3D a{n_r, HalfInteger::from_twice(1), HalfInteger::from_twice(3),
                          {Parity::even, Parity::odd, Parity::odd}};
      auto b = a;
      b.n_r = n_r + 1;
      const double diff = eigenvalue_3d(model, b) - eigenvalue_3d(model, a);
      spacing = std::max(spacing, std::abs(diff - 2.0 * hbar) / hbar);
    }
  }
  d += ", " + check(ok, "|spacing-2hbar|/hbar", spacing, 1e-14);

  const Dunkl3DModel half({0.5, 0.5, 0.5});
  const StateSpec3D worked{0, HalfInteger::integer(0), HalfInteger::from_twice(1),
                           {Parity::even, Parity::odd, Parity::even}};
  d += ", " + check(ok, "|sigma-3|", std::abs(separation_constants(half, worked).sigma - 3.0), 1e-12);
  return {ok, d};
}

Outcome commutator_algebra() {
  double t12 = 0.0;
  double t23 = 0.0;
  const auto grid = oracle::SpatialGrid1D::with_spacing(0.005, 8.0);
  const auto bump = oracle::gaussian_bump(grid, 3.0, 4.0);
  for (const double mu : kMus) {
    for (const Parity s : kParities) {
      const Dunkl1DModel model(mu);
      t12 = std::max(t12, oracle::commutator_check(oracle::Commutator::t1_t2, bump, model, s, 1e-3).value);
      t23 = std::max(t23, oracle::commutator_check(oracle::Commutator::t2_t3, bump, model, s, 1e-4).value);
    }
  }
  bool ok = true;
  std::string d = check(ok, "[T1,T2]", t12, 1e-3);
  d += ", " + check(ok, "[T2,T3]", t23, 1e-4);
  return {ok, d + " (h=0.005)"};
}

std::string default_config(double mu) {
  std::string text = fmt::format(R"([scenario]
t_end = 2.0
mass = {{ kind = "constant", c = 1.0 }}
frequency = {{ kind = "constant", c = 1.0 }}

[model]
dimension = "1d"
mu = {}
)",
                                 mu);
  for (const int s : {1, -1}) {
    for (int n = 0; n <= 2; ++n) text += fmt::format("\n[[states]]\nn = {}\ns = {}\n", n, s);
  }
  return text;
}

Outcome negative_control() {
  const auto dir = std::filesystem::temp_directory_path() / "dunkl_acceptance_negative_control";
  bool ok = true;
  std::string d;
  double clean_worst = 0.0;
  double corrupted_min = std::numeric_limits<double>::infinity();
  for (const double mu : kMus) {
    const auto config = cli::parse_config(default_config(mu));
    const auto clean = cli::run_verify(config, dir);
    const auto corrupted = cli::run_verify(config, dir, cli::VerifyHooks{1.01});
    ok = ok && clean.all_passed && !corrupted.all_passed;
    for (const auto& r : clean.reports) {
      if (r.name == "schrodinger-residual") clean_worst = std::max(clean_worst, r.value);
    }
    for (const auto& r : corrupted.reports) {
      if (r.name == "schrodinger-residual") {
        corrupted_min = std::min(corrupted_min, r.value);
        ok = ok && !r.passed;
      }
    }
  }
  std::filesystem::remove_all(dir);
  d = fmt::format("clean suite passes (max residual {:.3e}); rho*1.01 fails every schrodinger-residual "
                  "(min {:.3e} > 1e-4): {}",
                  clean_worst, corrupted_min, ok ? "yes" : "NO");
  return {ok, d};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ermakov-pinney stationarity", 1.0, pinney_stationarity},
      {2, "exact-solution schrodinger residual", 60.0, schrodinger_residuals},
      {3, "invariant eigenrelation", 10.0, invariant_eigenrelation},
      {4, "invariant conserved under crank-nicolson", 120.0, invariant_under_evolution},
      {5, "analytic vs propagated fidelity and phase", 120.0, fidelity_vs_analytic},
      {6, "orthonormality under the dunkl measure", 5.0, orthonormality},
      {7, "mu->0 hermite reduction", 1.0, hermite_reduction},
      {8, "3d angular equations", 10.0, angular_verification},
      {9, "3d spectrum", 1.0, spectrum_3d},
      {10, "commutator algebra", 5.0, commutator_algebra},
      {11, "negative control (rho perturbed by 1%)", 10.0, negative_control},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("[%s] %2d %s: %s; runtime %.2f s (budget %.0f s%s)\n", passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
