#include "uavpso/pso.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "uavpso/rng.hpp"

namespace uavpso {

SearchSpace SearchSpace::from_encoding(const EncodingSpec& spec) {
    SearchSpace space;
    space.lower.reserve(spec.dimension());
    space.upper.reserve(spec.dimension());
    for (int i = 0; i < spec.n_waypoints; ++i) {
        space.lower.push_back(spec.bounds.x_min);
        space.upper.push_back(spec.bounds.x_max);
        space.lower.push_back(spec.bounds.y_min);
        space.upper.push_back(spec.bounds.y_max);
    }
    return space;
}

namespace {

void evaluate_all(const std::vector<Particle>& particles, const Objective& objective,
                  EvalMode mode, std::vector<double>& costs) {
    const std::size_t n = particles.size();
    costs.resize(n);
    if (mode == EvalMode::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            costs[i] = objective(particles[i].position);
        }
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                costs[i] = objective(particles[i].position);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

std::vector<double> v_max_per_dimension(const SearchSpace& space, const PsoConfig& config) {
    std::vector<double> v_max(space.dimension());
    for (std::size_t d = 0; d < space.dimension(); ++d) {
        v_max[d] = config.v_max_fraction * (space.upper[d] - space.lower[d]);
    }
    return v_max;
}

}  // namespace

SwarmState init_swarm(const SearchSpace& space, const PsoConfig& config,
                      const Objective& objective, EvalMode mode) {
    const std::size_t dim = space.dimension();
    const auto v_max = v_max_per_dimension(space, config);

    SwarmState state;
    state.rng.seed(config.seed);
    state.particles.resize(config.swarm_size);
    for (Particle& p : state.particles) {
        p.position.resize(dim);
        p.velocity.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            p.position[d] = uniform_in(state.rng, space.lower[d], space.upper[d]);
        }
        for (std::size_t d = 0; d < dim; ++d) {
            p.velocity[d] = uniform_in(state.rng, -v_max[d], v_max[d]);
        }
    }

    std::vector<double> costs;
    evaluate_all(state.particles, objective, mode, costs);
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        state.particles[i].best_position = state.particles[i].position;
        state.particles[i].best_cost = costs[i];
    }

    // first strict minimum in index order
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.particles.size(); ++i) {
        if (state.particles[i].best_cost < state.particles[best].best_cost) best = i;
    }
    state.best_position = state.particles[best].best_position;
    state.best_cost = state.particles[best].best_cost;
    state.iteration = 0;
    state.history.push_back(state.best_cost);
    return state;
}

void step(SwarmState& state, const SearchSpace& space, const PsoConfig& config,
          const Objective& objective, EvalMode mode) {
    const std::size_t dim = space.dimension();
    const auto v_max = v_max_per_dimension(space, config);

    // serial phase: all random draws and kinematics
    for (Particle& p : state.particles) {
        for (std::size_t d = 0; d < dim; ++d) {
            const double r1 = canonical_unit(state.rng);
            const double r2 = canonical_unit(state.rng);
            double v = config.inertia_w * p.velocity[d] +
                       config.cognitive_c1 * r1 * (p.best_position[d] - p.position[d]) +
                       config.social_c2 * r2 * (state.best_position[d] - p.position[d]);
            v = std::clamp(v, -v_max[d], v_max[d]);
            p.velocity[d] = v;
            p.position[d] += v;
        }
    }

    // parallelizable phase: pure cost evaluations
    std::vector<double> costs;
    evaluate_all(state.particles, objective, mode, costs);

    // serial phase: strict-improvement best updates, ties keep the incumbent
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        Particle& p = state.particles[i];
        if (costs[i] < p.best_cost) {
            p.best_cost = costs[i];
            p.best_position = p.position;
            if (p.best_cost < state.best_cost) {
                state.best_cost = p.best_cost;
                state.best_position = p.best_position;
            }
        }
    }

    ++state.iteration;
    state.history.push_back(state.best_cost);
}

RunReport optimize(const Scenario& scenario, const EncodingSpec& spec,
                   const PsoConfig& config, const CostWeights& weights, EvalMode mode) {
    const auto t0 = std::chrono::steady_clock::now();

    const SearchSpace space = SearchSpace::from_encoding(spec);
    const Objective objective = [&](std::span<const double> position) {
        return evaluate(decode(position, spec, scenario.start, scenario.goal), scenario, weights)
            .total;
    };

    RunReport report;
    SwarmState state = init_swarm(space, config, objective, mode);

    double best_seen = state.best_cost;
    double best_length = path_length(decode(state.best_position, spec, scenario.start, scenario.goal));
    report.history.push_back({0, state.best_cost, best_length});

    for (int it = 1; it <= config.iterations; ++it) {
        step(state, space, config, objective, mode);
        if (state.best_cost < best_seen) {
            best_seen = state.best_cost;
            best_length =
                path_length(decode(state.best_position, spec, scenario.start, scenario.goal));
        }
        report.history.push_back({it, state.best_cost, best_length});
    }

    report.best_path = decode(state.best_position, spec, scenario.start, scenario.goal);
    report.best_breakdown = evaluate(report.best_path, scenario, weights);
    report.feasible = report.best_breakdown.feasible();
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace uavpso
