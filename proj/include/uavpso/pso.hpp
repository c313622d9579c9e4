#ifndef UAVPSO_PSO_HPP
#define UAVPSO_PSO_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "uavpso/cost.hpp"
#include "uavpso/path.hpp"
#include "uavpso/scenario.hpp"

namespace uavpso {

struct PsoConfig {
    int swarm_size = 40;
    int iterations = 300;
    double inertia_w = 0.7298;
    double cognitive_c1 = 1.49618;
    double social_c2 = 1.49618;
    /// Per-dimension velocity cap as a fraction of that dimension's span.
    double v_max_fraction = 0.2;
    std::uint64_t seed = 0;
};

/// Whether particle costs are evaluated on one thread or spread across a
/// thread pool. Results are identical either way: random draws happen in a
/// serial phase and each particle's evaluation is independent.
enum class EvalMode { Serial, Parallel };

/// Per-dimension box the swarm is initialized in and clamped against.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dimension() const { return lower.size(); }
    static SearchSpace from_encoding(const EncodingSpec& spec);
};

/// Objective over the raw particle vector. Path cost is the production
/// objective; tests plug in analytic functions directly.
using Objective = std::function<double(std::span<const double>)>;

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_cost = 0.0;

    bool operator==(const Particle&) const = default;
};

struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> best_position;
    double best_cost = 0.0;
    int iteration = 0;
    std::mt19937_64 rng;
    /// Global-best cost after init and after each step; non-increasing.
    std::vector<double> history;

    bool operator==(const SwarmState&) const = default;
};

SwarmState init_swarm(const SearchSpace& space, const PsoConfig& config,
                      const Objective& objective, EvalMode mode = EvalMode::Serial);

/// One barrier-synchronized iteration: serial coefficient draws (per
/// particle in index order, per dimension in index order, r1 before r2),
/// velocity update with clamp, position move, cost evaluation, then
/// strict-improvement best updates (ties keep the incumbent).
void step(SwarmState& state, const SearchSpace& space, const PsoConfig& config,
          const Objective& objective, EvalMode mode = EvalMode::Serial);

struct HistoryEntry {
    int iteration = 0;
    double best_total = 0.0;
    double best_length = 0.0;
};

struct RunReport {
    Path best_path;
    CostBreakdown best_breakdown;
    /// iterations + 1 entries: the initial evaluation plus each iteration.
    std::vector<HistoryEntry> history;
    bool feasible = false;
    double wall_time_seconds = 0.0;
};

/// Full planning run: init_swarm, `iterations` steps, decoded global best.
/// Deterministic for a fixed seed; always returns a report (the best may be
/// infeasible).
RunReport optimize(const Scenario& scenario, const EncodingSpec& spec,
                   const PsoConfig& config = {}, const CostWeights& weights = {},
                   EvalMode mode = EvalMode::Serial);

}  // namespace uavpso

#endif
