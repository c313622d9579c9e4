#include "uavpso/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "uavpso/errors.hpp"

namespace uavpso {

namespace {

struct Grid {
    int nx = 0;
    int ny = 0;
    double wx = 0.0;
    double wy = 0.0;
    Bounds bounds;

    Point center(int ix, int iy) const {
        return {bounds.x_min + (ix + 0.5) * wx, bounds.y_min + (iy + 0.5) * wy};
    }
    int cell_x(double x) const {
        return std::clamp(static_cast<int>((x - bounds.x_min) / wx), 0, nx - 1);
    }
    int cell_y(double y) const {
        return std::clamp(static_cast<int>((y - bounds.y_min) / wy), 0, ny - 1);
    }
    int id(int ix, int iy) const { return iy * nx + ix; }
};

Grid make_grid(const Bounds& bounds, double resolution) {
    Grid g;
    g.bounds = bounds;
    g.nx = std::max(1, static_cast<int>(std::llround(bounds.width() / resolution)));
    g.ny = std::max(1, static_cast<int>(std::llround(bounds.height() / resolution)));
    g.wx = bounds.width() / g.nx;
    g.wy = bounds.height() / g.ny;
    return g;
}

struct QueueEntry {
    double cost;
    int ix;
    int iy;
};

// min-heap on cost, ties on lexicographic (ix, iy)
struct QueueOrder {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.cost != b.cost) return a.cost > b.cost;
        if (a.ix != b.ix) return a.ix > b.ix;
        return a.iy > b.iy;
    }
};

}  // namespace

OracleResult grid_shortest_path(const Scenario& scenario, const GridSpec& spec) {
    const Grid grid = make_grid(scenario.bounds, spec.resolution);

    std::vector<char> blocked(static_cast<std::size_t>(grid.nx) * grid.ny, 0);
    for (const Threat& t : scenario.threats) {
        const int ix0 = std::max(0, grid.cell_x(t.center.x - t.radius) - 1);
        const int ix1 = std::min(grid.nx - 1, grid.cell_x(t.center.x + t.radius) + 1);
        const int iy0 = std::max(0, grid.cell_y(t.center.y - t.radius) - 1);
        const int iy1 = std::min(grid.ny - 1, grid.cell_y(t.center.y + t.radius) + 1);
        const double r2 = t.radius * t.radius;
        for (int iy = iy0; iy <= iy1; ++iy) {
            for (int ix = ix0; ix <= ix1; ++ix) {
                const Point c = grid.center(ix, iy);
                const double dx = c.x - t.center.x;
                const double dy = c.y - t.center.y;
                if (dx * dx + dy * dy < r2) {
                    blocked[grid.id(ix, iy)] = 1;
                }
            }
        }
    }

    const int sx = grid.cell_x(scenario.start.x);
    const int sy = grid.cell_y(scenario.start.y);
    const int gx = grid.cell_x(scenario.goal.x);
    const int gy = grid.cell_y(scenario.goal.y);
    if (blocked[grid.id(sx, sy)]) throw StartBlocked("start cell is blocked");
    if (blocked[grid.id(gx, gy)]) throw GoalBlocked("goal cell is blocked");

    const double diag = std::hypot(grid.wx, grid.wy);
    // E, NE, N, NW, W, SW, S, SE
    const int dx8[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    const int dy8[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    const double w8[8] = {grid.wx, diag, grid.wy, diag, grid.wx, diag, grid.wy, diag};

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(blocked.size(), inf);
    std::vector<int> parent(blocked.size(), -1);
    std::vector<char> settled(blocked.size(), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;

    dist[grid.id(sx, sy)] = 0.0;
    queue.push({0.0, sx, sy});
    while (!queue.empty()) {
        const QueueEntry top = queue.top();
        queue.pop();
        const int here = grid.id(top.ix, top.iy);
        if (settled[here]) continue;
        settled[here] = 1;
        if (top.ix == gx && top.iy == gy) break;
        for (int k = 0; k < 8; ++k) {
            const int nix = top.ix + dx8[k];
            const int niy = top.iy + dy8[k];
            if (nix < 0 || nix >= grid.nx || niy < 0 || niy >= grid.ny) continue;
            const int next = grid.id(nix, niy);
            if (blocked[next] || settled[next]) continue;
            const double cand = top.cost + w8[k];
            if (cand < dist[next]) {
                dist[next] = cand;
                parent[next] = here;
                queue.push({cand, nix, niy});
            }
        }
    }

    if (!settled[grid.id(gx, gy)]) throw NoPath("goal unreachable on the grid");

    std::vector<Point> centers;
    for (int cell = grid.id(gx, gy); cell != -1; cell = parent[cell]) {
        centers.push_back(grid.center(cell % grid.nx, cell / grid.nx));
    }
    std::reverse(centers.begin(), centers.end());

    OracleResult result;
    result.path = Path{scenario.start, scenario.goal, std::move(centers)};
    result.length = path_length(result.path);
    return result;
}

double octile_lower_bound(Point start, Point goal) {
    const double dx = std::abs(goal.x - start.x);
    const double dy = std::abs(goal.y - start.y);
    return std::max(dx, dy) + (std::numbers::sqrt2 - 1.0) * std::min(dx, dy);
}

}  // namespace uavpso
