#ifndef UAVPSO_COST_HPP
#define UAVPSO_COST_HPP

#include "uavpso/geometry.hpp"
#include "uavpso/path.hpp"
#include "uavpso/scenario.hpp"

namespace uavpso {

/// Penalty weights for the scalarized objective. The per-kind multipliers
/// default to 1 (radar and artillery are costed identically).
struct CostWeights {
    double w_threat = 1000.0;
    double w_bounds = 1000.0;
    double radar_multiplier = 1.0;
    double artillery_multiplier = 1.0;

    double multiplier(ThreatKind kind) const {
        return kind == ThreatKind::Radar ? radar_multiplier : artillery_multiplier;
    }
};

struct CostBreakdown {
    double length = 0.0;
    /// Sum over (segment, threat) pairs of multiplier * violation integral.
    double threat_violation = 0.0;
    /// Sampled integral of excursion distance outside the bounds box.
    double bounds_violation = 0.0;
    /// length + w_threat * threat_violation + w_bounds * bounds_violation.
    double total = 0.0;

    bool feasible() const { return threat_violation == 0.0 && bounds_violation == 0.0; }
};

/// Deterministic for fixed inputs. Throws EndpointMismatch when the path
/// endpoints differ from the scenario's.
CostBreakdown evaluate(const Path& path, const Scenario& scenario,
                       const CostWeights& weights = {}, int samples = kDefaultSamples);

}  // namespace uavpso

#endif
