#include "coverbound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coverbound {

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point a, Point b) { return norm(b - a); }

Point polar(double theta) { return {std::cos(theta), std::sin(theta)}; }

double orient(Point p, Point q, Point r) { return cross(q - p, r - p); }

void require_finite(std::span<const Point> points) {
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("non-finite point coordinate");
    }
  }
}

PointSet convex_hull(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("convex_hull: empty point set");
  }
  require_finite(points);

  PointSet pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    return pts;
  }

  PointSet hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  // The last point repeats the first one.
  hull.resize(k - 1);
  return hull;
}

double signed_area(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double mu(std::span<const Point> points) {
  const PointSet hull = convex_hull(points);
  return std::max(0.0, signed_area(hull));
}

double height(const Segment& ref, const Segment& s) {
  const Point dir = ref.b - ref.a;
  const double len = norm(dir);
  if (!(len > 0.0)) {
    throw std::invalid_argument("height: degenerate reference segment");
  }
  return std::abs(cross(dir, s.b - s.a)) / len;
}

}  // namespace coverbound
