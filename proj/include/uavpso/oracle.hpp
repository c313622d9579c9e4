#ifndef UAVPSO_ORACLE_HPP
#define UAVPSO_ORACLE_HPP

#include "uavpso/path.hpp"
#include "uavpso/scenario.hpp"

namespace uavpso {

/// Verification-oracle grid: cells of (approximately) `resolution` edge
/// covering the scenario bounds exactly, 8-connected. A cell is blocked iff
/// its center lies strictly inside any threat disc.
struct GridSpec {
    double resolution = 1.0;
};

struct OracleResult {
    /// start/goal are the scenario's own endpoints; interior vertices are
    /// the traversed cell centers.
    Path path;
    double length = 0.0;
};

/// Uniform-cost search over unblocked cells, edge weights 1 and sqrt(2)
/// times the cell edge. Deterministic: neighbors expand E, NE, N, NW, W,
/// SW, S, SE and priority-queue ties break on lexicographic (ix, iy).
/// Throws StartBlocked / GoalBlocked / NoPath.
OracleResult grid_shortest_path(const Scenario& scenario, const GridSpec& spec);

/// max(|dx|,|dy|) + (sqrt(2)-1) * min(|dx|,|dy|)
double octile_lower_bound(Point start, Point goal);

}  // namespace uavpso

#endif
