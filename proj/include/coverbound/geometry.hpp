#ifndef COVERBOUND_GEOMETRY_HPP
#define COVERBOUND_GEOMETRY_HPP

#include <span>
#include <vector>

namespace coverbound {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);
double distance(Point a, Point b);

// Unit vector at angle `theta` (radians).
Point polar(double theta);

struct Segment {
  Point a;
  Point b;
};

using PointSet = std::vector<Point>;

// Twice the signed area of triangle pqr; positive iff p, q, r turn
// counterclockwise. The sign of the raw expression is used as is.
double orient(Point p, Point q, Point r);

// Monotone-chain hull. Vertices are returned counterclockwise starting from
// the lexicographically smallest point; collinear boundary points and
// duplicates are dropped. All-collinear input yields the two extreme points
// (or a single point). Throws std::invalid_argument on empty input.
PointSet convex_hull(std::span<const Point> points);

// Shoelace area of a simple polygon, signed (positive for CCW order).
double signed_area(std::span<const Point> polygon);

// Area of the convex hull of `points` (the hull area functional). Zero for
// degenerate hulls. Throws std::invalid_argument on empty input.
double mu(std::span<const Point> points);

// Distance between the two lines parallel to `ref` through s.a and s.b.
// Throws std::invalid_argument when `ref` is degenerate.
double height(const Segment& ref, const Segment& s);

// Throws std::invalid_argument if any coordinate is NaN or infinite.
void require_finite(std::span<const Point> points);

}  // namespace coverbound

#endif  // COVERBOUND_GEOMETRY_HPP
