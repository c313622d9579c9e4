#include "uavpso/path.hpp"

#include <string>

#include "uavpso/errors.hpp"

namespace uavpso {

EncodingSpec::EncodingSpec(int n, Bounds b) : n_waypoints(n), bounds(b) {
    if (n < 1) {
        throw DimensionMismatch("encoding requires at least one waypoint, got " +
                                std::to_string(n));
    }
}

Path decode(std::span<const double> position, const EncodingSpec& spec,
            Point start, Point goal) {
    if (static_cast<int>(position.size()) != spec.dimension()) {
        throw DimensionMismatch("position vector has " + std::to_string(position.size()) +
                                " entries, expected " + std::to_string(spec.dimension()));
    }
    Path path{start, goal, {}};
    path.interior.reserve(spec.n_waypoints);
    for (int i = 0; i < spec.n_waypoints; ++i) {
        path.interior.push_back({position[2 * i], position[2 * i + 1]});
    }
    return path;
}

std::vector<double> encode(const Path& path) {
    std::vector<double> position;
    position.reserve(2 * path.interior.size());
    for (const Point& p : path.interior) {
        position.push_back(p.x);
        position.push_back(p.y);
    }
    return position;
}

double path_length(const Path& path) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.vertex_count(); ++i) {
        total += distance(path.vertex(i), path.vertex(i + 1));
    }
    return total;
}

}  // namespace uavpso
