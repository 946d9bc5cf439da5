#include "skylane/airspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skylane/errors.hpp"

namespace skylane {

void ObstaclePolygon::validate() const {
  if (vertices.size() < 3) throw Error("obstacle polygon needs at least 3 vertices");
  if (!(base_altitude < top_altitude))
    throw Error("obstacle base altitude must lie below its top altitude");
  if (!is_counterclockwise(vertices))
    throw Error("obstacle polygon must be counterclockwise");
  if (!is_simple_polygon(vertices))
    throw Error("obstacle polygon must be simple (non-self-intersecting)");
}

Axis axis_for_layer(int index) { return (index % 2 == 1) ? Axis::x : Axis::y; }

int direction_for_layer(int index) {
  const int r = index % 4;
  return (r == 1 || r == 0) ? +1 : -1;
}

std::vector<ObstaclePolygon> merge_proximal_obstacles(std::vector<ObstaclePolygon> polys,
                                                      double merge_distance) {
  if (polys.size() < 2) return polys;

  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    const int n = static_cast<int>(polys.size());

    // union-find over the proximity graph
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (polygon_distance(polys[i].vertices, polys[j].vertices) <= merge_distance) {
          const int ri = find(i), rj = find(j);
          if (ri != rj) {
            parent[std::max(ri, rj)] = std::min(ri, rj);
            merged_any = true;
          }
        }
      }
    }
    if (!merged_any) break;

    std::vector<ObstaclePolygon> next;
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
      const int root = find(i);
      if (done[root]) continue;
      done[root] = 1;
      std::vector<Vec2> points;
      ObstaclePolygon merged = polys[root];
      for (int j = i; j < n; ++j) {
        if (find(j) != root) continue;
        points.insert(points.end(), polys[j].vertices.begin(), polys[j].vertices.end());
        merged.base_altitude = std::min(merged.base_altitude, polys[j].base_altitude);
        merged.top_altitude = std::max(merged.top_altitude, polys[j].top_altitude);
      }
      if (points.size() > polys[root].vertices.size()) merged.vertices = convex_hull(points);
      next.push_back(std::move(merged));
    }
    polys = std::move(next);
  }
  return polys;
}

std::vector<ObstaclePolygon> section_layer(const std::vector<ObstaclePolygon>& polys,
                                           double h) {
  std::vector<ObstaclePolygon> out;
  for (const auto& p : polys)
    if (p.base_altitude <= h && h <= p.top_altitude) out.push_back(p);
  return out;
}

Grid::Grid(const Region& region, const std::vector<ObstaclePolygon>& sections, double dx,
           double dy, double inflation)
    : region_(region), inflation_(inflation), sections_(sections) {
  if (!region.valid()) throw Error("region bounds are not ordered");
  if (!(dx > 0.0) || !(dy > 0.0)) throw Error("grid spacing must be positive");

  nx_ = static_cast<int>(std::lround(region.width() / dx)) + 1;
  ny_ = static_cast<int>(std::lround(region.height() / dy)) + 1;
  if (nx_ < 3 || ny_ < 3) throw Error("grid needs at least 3 nodes per axis");
  dx_ = region.width() / (nx_ - 1);
  dy_ = region.height() / (ny_ - 1);

  kinds_.assign(static_cast<size_t>(nx_) * ny_, NodeKind::interior);
  bool border_hit = false;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      const bool border = (i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1);
      const Vec2 p(x(i), y(j));
      bool in_obstacle = false;
      for (const auto& s : sections_) {
        if (distance_to_polygon(p, s.vertices) <= inflation) {
          in_obstacle = true;
          break;
        }
      }
      if (border) {
        kinds_[index(i, j)] = NodeKind::boundary;
        ++m_boundary_;
        if (in_obstacle) border_hit = true;
      } else if (in_obstacle) {
        kinds_[index(i, j)] = NodeKind::obstacle;
        ++m_obstacle_;
      } else {
        ++m_interior_;
      }
    }
  }
  if (border_hit)
    throw ObstacleTouchesBoundary("inflated obstacle reaches the region border");

  // A fully obstructed interior column (or row) leaves no channel around
  // the obstacle for the corresponding flow axis.
  for (int i = 1; i < nx_ - 1; ++i) {
    bool all = true;
    for (int j = 1; j < ny_ - 1 && all; ++j) all = kind(i, j) == NodeKind::obstacle;
    if (all)
      throw ObstacleTouchesBoundary("obstacle obstructs an entire grid column");
  }
  for (int j = 1; j < ny_ - 1; ++j) {
    bool all = true;
    for (int i = 1; i < nx_ - 1 && all; ++i) all = kind(i, j) == NodeKind::obstacle;
    if (all) throw ObstacleTouchesBoundary("obstacle obstructs an entire grid row");
  }
}

Grid build_grid(const Region& region, const std::vector<ObstaclePolygon>& sections,
                double dx, double dy, double inflation) {
  for (const auto& s : sections) s.validate();
  return Grid(region, sections, dx, dy, inflation);
}

}  // namespace skylane
