#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/cli/config.hpp"
#include "dunkl/oracle/grid.hpp"

namespace dunkl::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kIoFailure = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
  kVerificationFailure = 4,
};

/// Fault injection for negative controls: the verify suite runs on a
/// trajectory whose rho and rho' are multiplied by rho_scale.
struct VerifyHooks {
  double rho_scale = 1.0;
};

struct VerifyOutcome {
  std::vector<oracle::ResidualReport> reports;
  bool all_passed = true;
};

/// pinney.csv: t,rho,rho_dot,theta,M,omega at every trajectory node.
void run_solve_pinney(const RunConfig& config, const std::filesystem::path& out_dir);

/// state_<label>_t<i>.csv per state and time sample plus eigenvalues.json.
void run_eval(const RunConfig& config, const std::filesystem::path& out_dir);

/// Runs the fixed check roster and writes verify.json:
///   pinney-residual; schrodinger-residual and invariant-eigenresidual per state
///   (3d: on the equivalent radial sector); gram-orthonormality;
///   commutator-t1-t2, commutator-t2-t3, commutator-t1-t3;
///   angular-residual-azimuthal/polar per state (3d);
///   invariant-drift (only with a [propagator] section).
VerifyOutcome run_verify(const RunConfig& config, const std::filesystem::path& out_dir, const VerifyHooks& hooks = {});

/// fidelity.csv: t,fidelity,norm_drift,invariant_drift every max(1, n_steps/1000) steps.
void run_propagate(const RunConfig& config, const std::filesystem::path& out_dir);

/// Loads the config, runs one subcommand and maps failures to exit codes,
/// printing diagnostics to `err`.
int run_command(std::string_view subcommand, const std::string& config_path,
                const std::optional<std::string>& out_dir, std::ostream& err, const VerifyHooks& hooks = {});

}  // namespace dunkl::cli
