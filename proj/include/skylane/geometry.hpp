#ifndef SKYLANE_GEOMETRY_HPP
#define SKYLANE_GEOMETRY_HPP

#include <Eigen/Core>
#include <vector>

namespace skylane {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Polyline = std::vector<Vec2>;
using PolygonRing = std::vector<Vec2>;

double cross2(const Vec2& a, const Vec2& b);

/// Twice the signed area; positive for counterclockwise rings.
double signed_area(const PolygonRing& ring);
bool is_counterclockwise(const PolygonRing& ring);
void make_counterclockwise(PolygonRing& ring);

/// Non-adjacent edge pairs must not intersect (shared endpoints allowed).
bool is_simple_polygon(const PolygonRing& ring);

/// Even-odd rule; points within `boundary_eps` of an edge count as inside.
bool point_in_polygon(const Vec2& p, const PolygonRing& ring,
                      double boundary_eps = 1e-9);

double distance_to_segment(const Vec2& p, const Vec2& a, const Vec2& b);
double segment_distance(const Vec2& a1, const Vec2& b1, const Vec2& a2,
                        const Vec2& b2);
bool segments_intersect(const Vec2& a1, const Vec2& b1, const Vec2& a2,
                        const Vec2& b2);

/// Distance from a point to the polygon boundary (0 inside is NOT implied).
double distance_to_polygon_boundary(const Vec2& p, const PolygonRing& ring);

/// Zero when the point is inside, else distance to the boundary.
double distance_to_polygon(const Vec2& p, const PolygonRing& ring);

bool polygons_overlap(const PolygonRing& a, const PolygonRing& b);

/// Zero when the polygons overlap, else the minimum boundary-to-boundary gap.
double polygon_distance(const PolygonRing& a, const PolygonRing& b);

/// Counterclockwise convex hull (monotone chain, collinear points dropped).
PolygonRing convex_hull(std::vector<Vec2> points);

/// Counterclockwise regular n-gon with vertices on the given circle.
PolygonRing regular_polygon(const Vec2& center, double radius, int sides);

double polyline_length(const Polyline& line);

/// Point at the given arc length from the start (clamped to the end).
Vec2 point_at_arc_length(const Polyline& line, double s);

bool polylines_intersect(const Polyline& a, const Polyline& b);

}  // namespace skylane

#endif  // SKYLANE_GEOMETRY_HPP
