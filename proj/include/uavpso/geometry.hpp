#ifndef UAVPSO_GEOMETRY_HPP
#define UAVPSO_GEOMETRY_HPP

namespace uavpso {

inline constexpr int kDefaultSamples = 64;

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

enum class ThreatKind { Radar, Artillery };

/// Circular exclusion disc. The kind only affects generated radii and
/// plot styling; cost semantics are identical for both.
struct Threat {
    Point center;
    double radius = 1.0;
    ThreatKind kind = ThreatKind::Radar;
};

struct Bounds {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    bool contains(Point p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

double distance(Point p, Point q);

/// Distance from p to the closest point of segment ab.
double point_segment_distance(Point p, Point a, Point b);

/// (minimum distance from the threat center to segment ab) - radius.
/// Negative: the segment cuts the disc; zero: tangent; positive: clear margin.
double segment_clearance(Point a, Point b, const Threat& t);

/// Sampled line integral of the penetration depth sqrt(max(0, r^2 - d^2))
/// along ab: `samples` equally spaced points (endpoints inclusive), mean
/// depth times |ab|. Exactly zero when every sample is on or outside the
/// disc boundary. samples must be >= 2.
double segment_violation(Point a, Point b, const Threat& t, int samples = kDefaultSamples);

/// Euclidean distance from p to the bounds box, 0 inside.
double box_excursion(Point p, const Bounds& bounds);

/// Sampled line integral of box_excursion along ab; same sampling rule as
/// segment_violation. Short-circuits to 0 when both endpoints are inside
/// (the box is convex).
double segment_bounds_violation(Point a, Point b, const Bounds& bounds,
                                int samples = kDefaultSamples);

}  // namespace uavpso

#endif
