#ifndef UAVPSO_PATH_HPP
#define UAVPSO_PATH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "uavpso/geometry.hpp"

namespace uavpso {

/// Polyline from start to goal through ordered free interior waypoints.
/// Start and goal are fixed per scenario; only the interior varies during
/// optimization.
struct Path {
    Point start;
    Point goal;
    std::vector<Point> interior;

    std::size_t vertex_count() const { return interior.size() + 2; }
    Point vertex(std::size_t i) const {
        if (i == 0) return start;
        if (i == interior.size() + 1) return goal;
        return interior[i - 1];
    }
    bool operator==(const Path&) const = default;
};

/// Particle layout: 2*n_waypoints reals, consecutive (x, y) pairs in path
/// order. Waypoints are absolute coordinates and are not clamped to the
/// bounds; out-of-bounds excursions are costed instead.
struct EncodingSpec {
    EncodingSpec(int n, Bounds b);

    int n_waypoints;
    Bounds bounds;

    int dimension() const { return 2 * n_waypoints; }
};

inline constexpr int kDefaultWaypoints = 6;

Path decode(std::span<const double> position, const EncodingSpec& spec,
            Point start, Point goal);

/// Flattened interior waypoints; inverse of decode for a fixed spec.
std::vector<double> encode(const Path& path);

double path_length(const Path& path);

}  // namespace uavpso

#endif
