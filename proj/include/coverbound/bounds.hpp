#ifndef COVERBOUND_BOUNDS_HPP
#define COVERBOUND_BOUNDS_HPP

#include <cmath>
#include <numbers>
#include <string_view>

#include "coverbound/shapes.hpp"

namespace coverbound {

// Lower-bound functions for the hull area of the unit segment, rectangle,
// triangle and broadworm over the canonical domain
//   theta0 <= alpha <= theta0 + pi/2,  pi/3 <= beta <= 2pi/3,
// and for the half-unit segment, side-1/4 square and unit-circumference
// circle over pi/4 <= alpha <= pi/2.
//
// Every function throws std::domain_error outside its domain.

struct MoserParams {
  double alpha;
  double beta;
  double b0 = kBroadwormBreadth;
};

struct ClosedParams {
  double alpha;
  double circle_width = kCircleWidth;
};

struct MoserDomain {
  double alpha_lo, alpha_hi, beta_lo, beta_hi;
};
MoserDomain moser_domain();

struct ClosedDomain {
  double alpha_lo, alpha_hi;
};
ClosedDomain closed_domain();

// Segment + rectangle: (sqrt5/8) sin(alpha).
double p(double alpha);
// Segment + triangle: max of the two sine branches.
double q(double beta);
// Segment + triangle + rectangle.
double f(double alpha, double beta);
// Segment + rectangle + broadworm of breadth b0 > 0.
double g(double alpha, double b0 = kBroadwormBreadth);

enum class MoserComponent { p, q, f, g };
std::string_view to_string(MoserComponent c);

struct MoserValue {
  double value;
  MoserComponent winner;  // ties resolved in the order p, q, f, g
};

MoserValue F(double alpha, double beta, double b0 = kBroadwormBreadth);
inline MoserValue F(const MoserParams& m) { return F(m.alpha, m.beta, m.b0); }

// Per-variable Lipschitz constants of F on the canonical domain.
inline const double kMoserLipschitzAlpha = std::sqrt(5.0) / 8;
inline constexpr double kMoserLipschitzBeta = 0.25;

double p_closed(double alpha);
double g_closed(double alpha, double circle_width = kCircleWidth);
double G(double alpha, double circle_width = kCircleWidth);
inline double G(const ClosedParams& c) { return G(c.alpha, c.circle_width); }

inline constexpr double kClosedLipschitzAlpha = std::numbers::sqrt2 / 16;

}  // namespace coverbound

#endif  // COVERBOUND_BOUNDS_HPP
