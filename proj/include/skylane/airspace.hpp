#ifndef SKYLANE_AIRSPACE_HPP
#define SKYLANE_AIRSPACE_HPP

#include <cstdint>
#include <vector>

#include "skylane/geometry.hpp"

namespace skylane {

/// Rectangular planning domain. Boundary sides are referred to as
/// bottom (y = y_min), right (x = x_max), top (y = y_max), left (x = x_min).
struct Region {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool valid() const { return x_min < x_max && y_min < y_max; }
};

enum class ObstacleKind : std::uint8_t { building, atm_no_fly, failed_uas };

/// Vertical prism over a simple counterclockwise polygon footprint.
struct ObstaclePolygon {
  PolygonRing vertices;
  double base_altitude = 0.0;
  double top_altitude = 0.0;
  ObstacleKind kind = ObstacleKind::building;

  /// Throws Error when the invariants do not hold.
  void validate() const;
};

enum class Axis : std::uint8_t { x, y };

/// One altitude slice of the airspace with a single permitted travel axis.
struct Layer {
  int index = 1;  // 1-based
  double altitude = 0.0;
  Axis axis = Axis::x;
  int direction = +1;  // +1 or -1 along the axis
  std::vector<ObstaclePolygon> sections;
};

/// Default travel axis: odd layers run along x, even layers along y.
Axis axis_for_layer(int index);
/// Default direction pattern: +x, -y, -x, +y repeating from layer 1.
int direction_for_layer(int index);

enum class NodeKind : std::uint8_t { boundary, interior, obstacle };

/// Uniform node lattice over a region with boundary/interior/obstacle
/// classification. Node (i, j) sits at (x_min + i*dx, y_min + j*dy).
class Grid {
public:
  Grid(const Region& region, const std::vector<ObstaclePolygon>& sections,
       double dx, double dy, double inflation);

  const Region& region() const { return region_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x(int i) const { return region_.x_min + i * dx_; }
  double y(int j) const { return region_.y_min + j * dy_; }
  int index(int i, int j) const { return j * nx_ + i; }

  NodeKind kind(int i, int j) const { return kinds_[index(i, j)]; }
  bool is_fixed(int i, int j) const { return kind(i, j) != NodeKind::interior; }

  int boundary_count() const { return m_boundary_; }
  int interior_count() const { return m_interior_; }
  int obstacle_count() const { return m_obstacle_; }
  int node_count() const { return nx_ * ny_; }

  double inflation() const { return inflation_; }
  const std::vector<ObstaclePolygon>& sections() const { return sections_; }

private:
  Region region_;
  double dx_, dy_, inflation_;
  int nx_, ny_;
  std::vector<NodeKind> kinds_;
  std::vector<ObstaclePolygon> sections_;
  int m_boundary_ = 0, m_interior_ = 0, m_obstacle_ = 0;
};

/// Replaces groups of polygons closer than `merge_distance` by the convex
/// hull of their union, repeating until all pairs are farther apart. The
/// merged altitude range spans the group's minimum base and maximum top.
std::vector<ObstaclePolygon> merge_proximal_obstacles(
    std::vector<ObstaclePolygon> polys, double merge_distance);

/// Polygons whose altitude interval contains h, in input order.
std::vector<ObstaclePolygon> section_layer(
    const std::vector<ObstaclePolygon>& polys, double h);

/// Classifies nodes: region border -> boundary, inside any section inflated
/// by `inflation` -> obstacle, rest -> interior. Throws
/// ObstacleTouchesBoundary when an obstacle reaches the border ring or
/// fully obstructs an interior row or column.
Grid build_grid(const Region& region, const std::vector<ObstaclePolygon>& sections,
                double dx, double dy, double inflation);

}  // namespace skylane

#endif  // SKYLANE_AIRSPACE_HPP
