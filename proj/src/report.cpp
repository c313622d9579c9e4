#include "uavpso/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "uavpso/errors.hpp"

namespace uavpso {

namespace {

struct WorldToCanvas {
    double scale;
    double offset_x;
    double offset_y;
    double world_x0;
    double world_y1;

    double px(double x) const { return offset_x + (x - world_x0) * scale; }
    // svg y grows downward
    double py(double y) const { return offset_y + (world_y1 - y) * scale; }
};

WorldToCanvas make_transform(const Bounds& bounds) {
    const double mx = PlotStyle::margin_fraction * bounds.width();
    const double my = PlotStyle::margin_fraction * bounds.height();
    const double w = bounds.width() + 2.0 * mx;
    const double h = bounds.height() + 2.0 * my;
    const double scale = std::min(PlotStyle::canvas_size / w, PlotStyle::canvas_size / h);
    WorldToCanvas t;
    t.scale = scale;
    t.offset_x = (PlotStyle::canvas_size - scale * w) / 2.0;
    t.offset_y = (PlotStyle::canvas_size - scale * h) / 2.0;
    t.world_x0 = bounds.x_min - mx;
    t.world_y1 = bounds.y_max + my;
    return t;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Scenario& scenario, const Path& path) {
    if (!(path.start == scenario.start) || !(path.goal == scenario.goal)) {
        throw EndpointMismatch("path endpoints differ from the scenario's start/goal");
    }
    const WorldToCanvas t = make_transform(scenario.bounds);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << PlotStyle::canvas_size << "\" height=\"" << PlotStyle::canvas_size
        << "\" viewBox=\"0 0 " << PlotStyle::canvas_size << " " << PlotStyle::canvas_size
        << "\">\n";

    for (const Threat& threat : scenario.threats) {
        svg << "  <circle cx=\"" << fixed2(t.px(threat.center.x)) << "\" cy=\""
            << fixed2(t.py(threat.center.y)) << "\" r=\"" << fixed2(threat.radius * t.scale)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }

    svg << "  <polyline points=\"";
    for (std::size_t i = 0; i < path.vertex_count(); ++i) {
        const Point v = path.vertex(i);
        if (i > 0) svg << " ";
        svg << fixed2(t.px(v.x)) << "," << fixed2(t.py(v.y));
    }
    svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\""
        << PlotStyle::dash_pattern << "\"/>\n";

    svg << "  <circle cx=\"" << fixed2(t.px(scenario.start.x)) << "\" cy=\""
        << fixed2(t.py(scenario.start.y)) << "\" r=\"" << fixed2(PlotStyle::marker_radius_px)
        << "\" fill=\"red\"/>\n";
    svg << "  <circle cx=\"" << fixed2(t.px(scenario.goal.x)) << "\" cy=\""
        << fixed2(t.py(scenario.goal.y)) << "\" r=\"" << fixed2(PlotStyle::marker_radius_px)
        << "\" fill=\"blue\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

std::string write_convergence_csv(const std::vector<HistoryEntry>& history) {
    if (history.empty()) {
        throw EmptyHistory("convergence history is empty");
    }
    std::ostringstream csv;
    csv << "iteration,best_total,best_length\n";
    for (const HistoryEntry& entry : history) {
        csv << entry.iteration << "," << sig6(entry.best_total) << "," << sig6(entry.best_length)
            << "\n";
    }
    return csv.str();
}

}  // namespace uavpso
