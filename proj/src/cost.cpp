#include "uavpso/cost.hpp"

#include "uavpso/errors.hpp"

namespace uavpso {

CostBreakdown evaluate(const Path& path, const Scenario& scenario,
                       const CostWeights& weights, int samples) {
    if (!(path.start == scenario.start) || !(path.goal == scenario.goal)) {
        throw EndpointMismatch("path endpoints differ from the scenario's start/goal");
    }

    CostBreakdown breakdown;
    for (std::size_t i = 0; i + 1 < path.vertex_count(); ++i) {
        const Point a = path.vertex(i);
        const Point b = path.vertex(i + 1);
        breakdown.length += distance(a, b);
        for (const Threat& t : scenario.threats) {
            // violation is exactly zero whenever the segment clears the disc,
            // so the sampled integral only runs for intersecting pairs
            if (segment_clearance(a, b, t) < 0.0) {
                breakdown.threat_violation +=
                    weights.multiplier(t.kind) * segment_violation(a, b, t, samples);
            }
        }
        breakdown.bounds_violation += segment_bounds_violation(a, b, scenario.bounds, samples);
    }
    breakdown.total = breakdown.length + weights.w_threat * breakdown.threat_violation +
                      weights.w_bounds * breakdown.bounds_violation;
    return breakdown;
}

}  // namespace uavpso
