#include "coverbound/shapes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coverbound {
namespace {

// Reduces `x` into [lo, lo + period).
double reduce_angle(double x, double lo, double period) {
  double r = std::fmod(x - lo, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return lo + r;
}

void require_range(double value, double lo, double hi, bool hi_closed,
                   const char* what) {
  const bool ok = value >= lo && (hi_closed ? value <= hi : value < hi);
  if (!ok) {
    throw std::domain_error(std::string(what) + " out of admissible range: " +
                            std::to_string(value));
  }
}

Quad diagonal_quad(Point center, double alpha, double half_diag,
                   double theta0, double long_side) {
  const Point diag = half_diag * polar(alpha);
  const Point side = long_side * polar(alpha - theta0);
  Quad q;
  q.a = center + diag;
  q.c = center - diag;
  q.d = q.c + side;
  q.b = q.a - side;
  return q;
}

}  // namespace

double rect_theta0() { return std::atan(0.5); }

SegVertices seg_vertices(const SegConfig& cfg) {
  const Point half{0.5 * cfg.length, 0.0};
  return {cfg.center - half, cfg.center + half};
}

double RectConfig::theta0() const { return std::atan2(short_side, long_side); }

double RectConfig::half_diag() const {
  return 0.5 * std::hypot(long_side, short_side);
}

Quad rect_vertices(const RectConfig& cfg) {
  const double theta0 = cfg.theta0();
  require_range(cfg.alpha, theta0, theta0 + kPi, false, "rectangle alpha");
  return diagonal_quad(cfg.center, cfg.alpha, cfg.half_diag(), theta0,
                       cfg.long_side);
}

double TriConfig::circumradius() const { return side / std::sqrt(3.0); }

Tri tri_vertices(const TriConfig& cfg) {
  require_range(cfg.beta, kPi / 6, 5 * kPi / 6, false, "triangle beta");
  Tri t;
  t.p = cfg.center + cfg.circumradius() * polar(cfg.beta);
  t.q = t.p - cfg.side * polar(cfg.beta - kPi / 6);
  t.r = t.p - cfg.side * polar(cfg.beta + kPi / 6);
  return t;
}

double SquareConfig::half_diag() const { return side / std::sqrt(2.0); }

Quad square_vertices(const SquareConfig& cfg) {
  require_range(cfg.alpha, kPi / 4, kPi / 2, true, "square alpha");
  return diagonal_quad(cfg.center, cfg.alpha, cfg.half_diag(), kPi / 4,
                       cfg.side);
}

BreadthWitness make_breadth_witness(const Segment& ref, Point start,
                                    double tangential, double b0) {
  const Point dir = ref.b - ref.a;
  const double len = norm(dir);
  if (!(len > 0.0)) {
    throw std::invalid_argument("breadth witness: degenerate reference");
  }
  const Point along = (1.0 / len) * dir;
  const Point normal{-along.y, along.x};
  return {start, start + b0 * normal + tangential * along, b0};
}

AnglePair apply_sigma(AnglePair angles) {
  const double beta =
      angles.beta < kPi / 2 ? angles.beta + kPi / 3 : angles.beta - kPi / 3;
  return {angles.alpha, beta};
}

AnglePair apply_tau(AnglePair angles) {
  // The long side C->D at alpha - theta0 mirrors to pi - (alpha - theta0).
  const double theta0 = rect_theta0();
  return {reduce_angle(kPi + 2 * theta0 - angles.alpha, theta0, kPi),
          reduce_angle(kPi - angles.beta, kPi / 6, 2 * kPi / 3)};
}

AnglePair canonicalize(AnglePair angles) {
  const double theta0 = rect_theta0();
  require_range(angles.alpha, theta0, theta0 + kPi, false, "alpha");
  require_range(angles.beta, kPi / 6, 5 * kPi / 6, false, "beta");
  if (angles.alpha > theta0 + kPi / 2) angles = apply_tau(angles);
  if (angles.beta < kPi / 3 || angles.beta > 2 * kPi / 3) {
    angles = apply_sigma(angles);
  }
  return angles;
}

double rect_alpha_of(const Quad& quad, double theta0) {
  const auto pts = quad.points();
  const PointSet hull = convex_hull(pts);
  if (hull.size() != 4) {
    throw std::invalid_argument("rect_alpha_of: not a rectangle");
  }
  std::size_t longest = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double len = distance(hull[i], hull[(i + 1) % 4]);
    if (len > best * (1 + 1e-12)) {
      best = len;
      longest = i;
    }
  }
  const Point side = hull[(longest + 1) % 4] - hull[longest];
  return reduce_angle(std::atan2(side.y, side.x) + theta0, theta0, kPi);
}

double tri_beta_of(const Tri& tri) {
  const Point centroid = (1.0 / 3.0) * (tri.p + tri.q + tri.r);
  const Point v = tri.p - centroid;
  return reduce_angle(std::atan2(v.y, v.x), kPi / 6, 2 * kPi / 3);
}

}  // namespace coverbound
