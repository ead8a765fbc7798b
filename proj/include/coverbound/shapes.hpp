#ifndef COVERBOUND_SHAPES_HPP
#define COVERBOUND_SHAPES_HPP

#include <array>
#include <numbers>

#include "coverbound/geometry.hpp"

namespace coverbound {

inline constexpr double kPi = std::numbers::pi;

// Angle between the diagonal and the long side of the 1/2 x 1/4 rectangle,
// arctan(1/2).
double rect_theta0();

// Breadth of the broadworm as used by the bound g.
inline constexpr double kBroadwormBreadth = 0.4389;

// Width of the circle with unit circumference.
inline constexpr double kCircleWidth = std::numbers::inv_pi;

// Horizontal segment L with endpoints E (left) and F (right).
struct SegConfig {
  Point center;
  double length = 1.0;
};

struct SegVertices {
  Point e;
  Point f;
};

SegVertices seg_vertices(const SegConfig& cfg);

// U-shaped worm hull: rectangle ABCD. `alpha` is the angle of the diagonal
// C->A; the long side C->D sits at alpha - theta0.
struct RectConfig {
  Point center;
  double alpha = 0.0;
  double long_side = 0.5;
  double short_side = 0.25;

  double theta0() const;
  double half_diag() const;
};

struct Quad {
  Point a, b, c, d;

  std::array<Point, 4> points() const { return {a, b, c, d}; }
};

// Throws std::domain_error unless theta0 <= alpha < theta0 + pi.
Quad rect_vertices(const RectConfig& cfg);

// V-shaped worm hull: equilateral triangle PQR with side 1/2 and centroid
// `center`. `beta` is the angle of centroid->P.
struct TriConfig {
  Point center;
  double beta = kPi / 2;
  double side = 0.5;

  double circumradius() const;
};

struct Tri {
  Point p, q, r;

  std::array<Point, 3> points() const { return {p, q, r}; }
};

// Throws std::domain_error unless pi/6 <= beta < 5pi/6.
Tri tri_vertices(const TriConfig& cfg);

// Side-1/4 square for the closed-curve problem; built like the rectangle with
// theta0 = pi/4.
struct SquareConfig {
  Point center;
  double alpha = kPi / 4;
  double side = 0.25;

  double half_diag() const;
};

// Throws std::domain_error unless pi/4 <= alpha <= pi/2.
Quad square_vertices(const SquareConfig& cfg);

// Two points of the broadworm whose height relative to the rectangle side AB
// is at least b0.
struct BreadthWitness {
  Point s;
  Point t;
  double b0 = kBroadwormBreadth;
};

// Witness pair with height exactly b0 against `ref`; `start` is S and
// `tangential` slides T along the reference direction.
BreadthWitness make_breadth_witness(const Segment& ref, Point start,
                                    double tangential,
                                    double b0 = kBroadwormBreadth);

struct AnglePair {
  double alpha;
  double beta;
};

// Point reflection through the origin (sigma) and reflection across the
// y-axis (tau), as they act on the rectangle angle alpha in
// [theta0, theta0 + pi) and the triangle angle beta in [pi/6, 5pi/6).
AnglePair apply_sigma(AnglePair angles);
AnglePair apply_tau(AnglePair angles);

// Maps admissible (alpha, beta) into [theta0, theta0 + pi/2] x [pi/3, 2pi/3].
// tau is applied first when alpha > theta0 + pi/2, then sigma when beta is
// still outside [pi/3, 2pi/3]. Throws std::domain_error on inadmissible input.
AnglePair canonicalize(AnglePair angles);

// Orientation angles re-derived from vertices.
double rect_alpha_of(const Quad& quad, double theta0);
double tri_beta_of(const Tri& tri);

}  // namespace coverbound

#endif  // COVERBOUND_SHAPES_HPP
