#ifndef UAVPSO_REPORT_HPP
#define UAVPSO_REPORT_HPP

#include <string>
#include <vector>

#include "uavpso/path.hpp"
#include "uavpso/pso.hpp"
#include "uavpso/scenario.hpp"

namespace uavpso {

/// Figure conventions, fixed so plots stay visually comparable run to run:
/// start = small filled red circle, goal = small filled blue circle, threats
/// = unfilled black circles at world radius (radar large, artillery small by
/// data), path = black dashed polyline, canvas = bounds fitted into 800x800
/// with a 5% margin, aspect ratio preserved.
struct PlotStyle {
    static constexpr int canvas_size = 800;
    static constexpr double margin_fraction = 0.05;
    static constexpr double marker_radius_px = 6.0;
    static constexpr const char* dash_pattern = "6,4";
};

/// Well-formed SVG 1.1 text, byte-identical for identical inputs. Element
/// census: one circle per threat, two marker circles, one polyline.
/// Throws EndpointMismatch when the path endpoints differ from the scenario.
std::string render_svg(const Scenario& scenario, const Path& path);

/// Header `iteration,best_total,best_length`, one row per entry, 6
/// significant digits, LF line endings. Throws EmptyHistory.
std::string write_convergence_csv(const std::vector<HistoryEntry>& history);

}  // namespace uavpso

#endif
