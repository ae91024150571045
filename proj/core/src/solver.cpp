#include "zomd/solver.hpp"

#include <chrono>
#include <cmath>

namespace zomd {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Iterations at which the running average is checkpointed: powers of ~1.3
// plus the final iterate, so log-log fits stay cheap.
std::vector<std::int64_t> checkpoint_grid(std::int64_t T, bool log_spaced) {
  std::vector<std::int64_t> ks;
  if (T <= 0) return ks;
  if (log_spaced) {
    double v = 1.0;
    std::int64_t last = 0;
    while (true) {
      const auto k = static_cast<std::int64_t>(std::ceil(v));
      if (k >= T) break;
      if (k > last) {
        ks.push_back(k);
        last = k;
      }
      v *= 1.3;
    }
  }
  ks.push_back(T);
  return ks;
}

struct LoopResult {
  Vec average;
  Vec sum;
};

// Shared iteration loop; `use_clip` is the only difference between the two
// algorithms. When clipping is inactive the sample's gradient is reused
// unchanged so the trajectories agree bit for bit.
RunRecord run_loop(const NoisyOracle& oracle, const ProxSetup& setup,
                   const FeasibleSet& set, const Schedule& schedule,
                   SeedStream& stream, const SolverOptions& options,
                   bool use_clip, const Vec& x_start, Clock::time_point t0) {
  RunRecord rec;
  rec.seed_root = stream.root();
  rec.seed_stream = stream.stream();

  const auto T = schedule.iterations;
  Vec x = x_start;
  Vec sum = Vec::Zero(x.size());
  std::int64_t count = 0;

  const auto grid = checkpoint_grid(T, options.log_checkpoints);
  std::size_t next_cp = 0;
  const auto record_cp = [&](std::int64_t iter) {
    const Vec avg = sum / static_cast<double>(count);
    rec.checkpoints.push_back(Checkpoint{
        iter, 2 * iter, suboptimality(oracle.problem(), avg), ms_since(t0)});
  };

  for (std::int64_t k = 0; k < T; ++k) {
    sum += x;
    ++count;
    if (options.keep_trajectory) rec.trajectory.push_back(x);

    GradientSample sample = estimate_gradient(oracle, x, schedule.tau, stream);
    Vec g = sample.gradient();
    rec.max_grad_norm2 = std::max(rec.max_grad_norm2, sample.norm2());
    if (use_clip && !options.clip_disabled) {
      ClippedGradient cg = clip(g, schedule.clip(), setup.q());
      if (cg.was_clipped) {
        ++rec.clipped_steps;
        g = std::move(cg.g);
      }
    }
    x = mirror_step(setup, set, x, schedule.nu * g);

    if (next_cp < grid.size() && k + 1 == grid[next_cp]) {
      record_cp(k + 1);
      ++next_cp;
    }
  }

  if (T == 0) {
    sum = x;
    count = 1;
    rec.checkpoints.push_back(Checkpoint{
        0, 0, suboptimality(oracle.problem(), x), ms_since(t0)});
  }
  rec.final_average = sum / static_cast<double>(count);
  rec.final_suboptimality =
      suboptimality(oracle.problem(), rec.final_average);
  rec.iterations = T;
  rec.queries = 2 * T;
  rec.wall_ms = ms_since(t0);
  return rec;
}

Vec resolve_start(const ProxSetup& setup, const FeasibleSet& set,
                  const SolverOptions& options) {
  if (options.x_start.has_value()) {
    if (!set.contains(*options.x_start))
      throw DomainError("solver start point is infeasible: " +
                        format_point(*options.x_start));
    return *options.x_start;
  }
  return min_point(setup, set);
}

}  // namespace

RunRecord zo_rsmd(const NoisyOracle& oracle, const ProxSetup& setup,
                  const FeasibleSet& set, const Schedule& schedule,
                  SeedStream stream, const SolverOptions& options) {
  if (schedule.regime != Regime::RobustExpectation)
    throw ConfigError("zo_rsmd expects a robust_expectation schedule, got " +
                      regime_name(schedule.regime));
  if (!setup.certifies_uniform_convexity(schedule.kappa))
    throw ConfigError(
        "zo_rsmd needs a (1, (1+kappa)/kappa)-uniformly convex setup; " +
        setup.describe() + " does not certify kappa = " +
        std::to_string(schedule.kappa));
  check_supported_pair(setup, set);
  const auto t0 = Clock::now();
  const Vec x0 = resolve_start(setup, set, options);
  return run_loop(oracle, setup, set, schedule, stream, options,
                  /*use_clip=*/false, x0, t0);
}

RunRecord zo_clip_smd(const NoisyOracle& oracle, const ProxSetup& setup,
                      const FeasibleSet& set, const Schedule& schedule,
                      SeedStream stream, const SolverOptions& options) {
  if (schedule.regime == Regime::RobustExpectation)
    throw ConfigError("zo_clip_smd expects a clip schedule, got " +
                      regime_name(schedule.regime));
  if (!setup.strongly_convex())
    throw ConfigError("zo_clip_smd needs a 1-strongly convex setup; " +
                      setup.describe() + " does not qualify");
  if (schedule.iterations > 0 && !schedule.clip_level.has_value())
    throw ConfigError("zo_clip_smd schedule carries no clip level");
  if (schedule.clip_level.has_value() && std::isinf(*schedule.clip_level))
    throw ConfigError("infinite clip level sentinel is not allowed; "
                      "use a finite level or disable clipping explicitly");
  check_supported_pair(setup, set);
  const auto t0 = Clock::now();
  const Vec x0 = resolve_start(setup, set, options);
  return run_loop(oracle, setup, set, schedule, stream, options,
                  /*use_clip=*/true, x0, t0);
}

RunRecord zo_restarts(const NoisyOracle& oracle, const ProxSetup& setup,
                      const FeasibleSet& set, const RestartPlan& plan,
                      SeedStream stream, const SolverOptions& options) {
  const auto t0 = Clock::now();
  RunRecord rec;
  rec.seed_root = stream.root();
  rec.seed_stream = stream.stream();

  Vec x = resolve_start(setup, set, options);
  std::int64_t iter_base = 0;
  for (int k = 0; k < plan.restarts; ++k) {
    Schedule stage = plan.stage_schedule(k);
    if (oracle.delta_bound() > plan.stage_delta_max[k]) {
      rec.warnings.push_back(
          "stage " + std::to_string(k + 1) + ": adversarial bound " +
          std::to_string(oracle.delta_bound()) + " exceeds admissible " +
          std::to_string(plan.stage_delta_max[k]) +
          "; the guarantee is void for this stage");
    }
    SolverOptions stage_options = options;
    stage_options.x_start = x;
    RunRecord stage_rec =
        plan.base_regime == Regime::RobustExpectation
            ? zo_rsmd(oracle, setup, set, stage, stream.fork(k), stage_options)
            : zo_clip_smd(oracle, setup, set, stage, stream.fork(k),
                          stage_options);
    x = stage_rec.final_average;
    rec.stage_suboptimality.push_back(stage_rec.final_suboptimality);
    rec.max_grad_norm2 = std::max(rec.max_grad_norm2, stage_rec.max_grad_norm2);
    rec.clipped_steps += stage_rec.clipped_steps;
    for (const auto& cp : stage_rec.checkpoints) {
      rec.checkpoints.push_back(Checkpoint{iter_base + cp.iteration,
                                           2 * (iter_base + cp.iteration),
                                           cp.suboptimality, ms_since(t0)});
    }
    if (options.keep_trajectory) {
      for (auto& v : stage_rec.trajectory)
        rec.trajectory.push_back(std::move(v));
    }
    iter_base += stage.iterations;
  }
  if (plan.restarts == 0) {
    rec.checkpoints.push_back(
        Checkpoint{0, 0, suboptimality(oracle.problem(), x), ms_since(t0)});
  }
  rec.final_average = x;
  rec.final_suboptimality = suboptimality(oracle.problem(), x);
  rec.iterations = iter_base;
  rec.queries = 2 * iter_base;
  rec.wall_ms = ms_since(t0);
  return rec;
}

}  // namespace zomd
