#include "uavpso/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace uavpso {

double distance(Point p, Point q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

double point_segment_distance(Point p, Point a, Point b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) {
        return distance(p, a);
    }
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(a.x + t * vx - p.x, a.y + t * vy - p.y);
}

double segment_clearance(Point a, Point b, const Threat& t) {
    return point_segment_distance(t.center, a, b) - t.radius;
}

double segment_violation(Point a, Point b, const Threat& t, int samples) {
    const double len = distance(a, b);
    if (len == 0.0) {
        return 0.0;
    }
    const double r2 = t.radius * t.radius;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double px = a.x + (b.x - a.x) * s;
        const double py = a.y + (b.y - a.y) * s;
        const double dx = px - t.center.x;
        const double dy = py - t.center.y;
        const double depth2 = r2 - (dx * dx + dy * dy);
        if (depth2 > 0.0) {
            sum += std::sqrt(depth2);
        }
    }
    return sum / static_cast<double>(samples) * len;
}

double box_excursion(Point p, const Bounds& bounds) {
    const double dx = std::max({0.0, bounds.x_min - p.x, p.x - bounds.x_max});
    const double dy = std::max({0.0, bounds.y_min - p.y, p.y - bounds.y_max});
    return std::hypot(dx, dy);
}

double segment_bounds_violation(Point a, Point b, const Bounds& bounds, int samples) {
    if (bounds.contains(a) && bounds.contains(b)) {
        return 0.0;
    }
    const double len = distance(a, b);
    if (len == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(samples - 1);
        const Point p{a.x + (b.x - a.x) * s, a.y + (b.y - a.y) * s};
        sum += box_excursion(p, bounds);
    }
    return sum / static_cast<double>(samples) * len;
}

}  // namespace uavpso
