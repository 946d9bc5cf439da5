#include "skylane/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skylane {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double signed_area(const PolygonRing& ring) {
  double twice = 0.0;
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    const Vec2& p = ring[i];
    const Vec2& q = ring[(i + 1) % n];
    twice += cross2(p, q);
  }
  return 0.5 * twice;
}

bool is_counterclockwise(const PolygonRing& ring) { return signed_area(ring) > 0.0; }

void make_counterclockwise(PolygonRing& ring) {
  if (!is_counterclockwise(ring)) std::reverse(ring.begin(), ring.end());
}

namespace {

int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = cross2(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x(), b.x()) - 1e-12 <= p.x() && p.x() <= std::max(a.x(), b.x()) + 1e-12 &&
         std::min(a.y(), b.y()) - 1e-12 <= p.y() && p.y() <= std::max(a.y(), b.y()) + 1e-12;
}

}  // namespace

bool segments_intersect(const Vec2& a1, const Vec2& b1, const Vec2& a2, const Vec2& b2) {
  const int o1 = orientation_sign(a1, b1, a2);
  const int o2 = orientation_sign(a1, b1, b2);
  const int o3 = orientation_sign(a2, b2, a1);
  const int o4 = orientation_sign(a2, b2, b1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, b1, a2)) return true;
  if (o2 == 0 && on_segment(a1, b1, b2)) return true;
  if (o3 == 0 && on_segment(a2, b2, a1)) return true;
  if (o4 == 0 && on_segment(a2, b2, b1)) return true;
  return false;
}

bool is_simple_polygon(const PolygonRing& ring) {
  const int n = static_cast<int>(ring.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

double distance_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double segment_distance(const Vec2& a1, const Vec2& b1, const Vec2& a2, const Vec2& b2) {
  if (segments_intersect(a1, b1, a2, b2)) return 0.0;
  return std::min(std::min(distance_to_segment(a2, a1, b1), distance_to_segment(b2, a1, b1)),
                  std::min(distance_to_segment(a1, a2, b2), distance_to_segment(b1, a2, b2)));
}

double distance_to_polygon_boundary(const Vec2& p, const PolygonRing& ring) {
  double best = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i)
    best = std::min(best, distance_to_segment(p, ring[i], ring[(i + 1) % n]));
  return best;
}

bool point_in_polygon(const Vec2& p, const PolygonRing& ring, double boundary_eps) {
  const int n = static_cast<int>(ring.size());
  if (n < 3) return false;
  if (distance_to_polygon_boundary(p, ring) <= boundary_eps) return true;
  bool inside = false;
  for (int i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[j];
    const bool straddles = (a.y() > p.y()) != (b.y() > p.y());
    if (straddles) {
      const double x_cross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

double distance_to_polygon(const Vec2& p, const PolygonRing& ring) {
  if (point_in_polygon(p, ring)) return 0.0;
  return distance_to_polygon_boundary(p, ring);
}

bool polygons_overlap(const PolygonRing& a, const PolygonRing& b) {
  for (const Vec2& p : a)
    if (point_in_polygon(p, b)) return true;
  for (const Vec2& p : b)
    if (point_in_polygon(p, a)) return true;
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (segments_intersect(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb])) return true;
  return false;
}

double polygon_distance(const PolygonRing& a, const PolygonRing& b) {
  if (polygons_overlap(a, b)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      best = std::min(best, segment_distance(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb]));
  return best;
}

PolygonRing convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](const Vec2& p, const Vec2& q) {
    return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec2& p, const Vec2& q) { return p == q; }),
               points.end());
  const int n = static_cast<int>(points.size());
  if (n < 3) return points;
  std::vector<Vec2> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = points[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross2(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

PolygonRing regular_polygon(const Vec2& center, double radius, int sides) {
  PolygonRing ring;
  ring.reserve(sides);
  for (int i = 0; i < sides; ++i) {
    const double theta = 2.0 * M_PI * i / sides;
    ring.emplace_back(center.x() + radius * std::cos(theta),
                      center.y() + radius * std::sin(theta));
  }
  return ring;
}

double polyline_length(const Polyline& line) {
  double s = 0.0;
  for (size_t i = 1; i < line.size(); ++i) s += (line[i] - line[i - 1]).norm();
  return s;
}

Vec2 point_at_arc_length(const Polyline& line, double s) {
  if (s <= 0.0) return line.front();
  double acc = 0.0;
  for (size_t i = 1; i < line.size(); ++i) {
    const double seg = (line[i] - line[i - 1]).norm();
    if (acc + seg >= s && seg > 0.0) {
      const double t = (s - acc) / seg;
      return line[i - 1] + t * (line[i] - line[i - 1]);
    }
    acc += seg;
  }
  return line.back();
}

bool polylines_intersect(const Polyline& a, const Polyline& b) {
  for (size_t i = 1; i < a.size(); ++i)
    for (size_t j = 1; j < b.size(); ++j)
      if (segments_intersect(a[i - 1], a[i], b[j - 1], b[j])) return true;
  return false;
}

}  // namespace skylane
