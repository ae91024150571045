#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zomd/estimator.hpp"
#include "zomd/prox.hpp"
#include "zomd/schedule.hpp"

namespace zomd {

struct Checkpoint {
  std::int64_t iteration;
  std::int64_t queries;
  double suboptimality;
  double wall_ms;
};

/// Trajectory summary of one solver run.
struct RunRecord {
  std::string config_hash;
  std::uint64_t seed_root = 0;
  std::uint64_t seed_stream = 0;
  std::vector<Checkpoint> checkpoints;
  Vec final_average;
  double final_suboptimality = 0.0;
  std::int64_t iterations = 0;
  std::int64_t queries = 0;
  double wall_ms = 0.0;
  double max_grad_norm2 = 0.0;
  std::int64_t clipped_steps = 0;
  std::vector<std::string> warnings;
  std::vector<double> stage_suboptimality;  // restarts only
  // debug mode only: iterates x_0 .. x_{T-1} entering the average
  std::vector<Vec> trajectory;
};

struct SolverOptions {
  std::optional<Vec> x_start;      // defaults to argmin_X Psi
  bool keep_trajectory = false;    // debug mode
  bool log_checkpoints = true;     // log-spaced (factor ~1.3); else final only
  bool clip_disabled = false;      // paired comparisons: bypass clipping
};

/// Mirror descent with the two-point estimator (robust, unclipped).
RunRecord zo_rsmd(const NoisyOracle& oracle, const ProxSetup& setup,
                  const FeasibleSet& set, const Schedule& schedule,
                  SeedStream stream, const SolverOptions& options = {});

/// Same loop with each estimate clipped in the q-norm before the dual step.
RunRecord zo_clip_smd(const NoisyOracle& oracle, const ProxSetup& setup,
                      const FeasibleSet& set, const Schedule& schedule,
                      SeedStream stream, const SolverOptions& options = {});

/// Restarted runs on shrinking radii; each stage warm-starts at the previous
/// stage's averaged iterate.
RunRecord zo_restarts(const NoisyOracle& oracle, const ProxSetup& setup,
                      const FeasibleSet& set, const RestartPlan& plan,
                      SeedStream stream, const SolverOptions& options = {});

}  // namespace zomd
