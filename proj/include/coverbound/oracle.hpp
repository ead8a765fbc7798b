#ifndef COVERBOUND_ORACLE_HPP
#define COVERBOUND_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coverbound/geometry.hpp"
#include "coverbound/shapes.hpp"

namespace coverbound {

inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kHullAgreement = 1e-12;
inline constexpr int kCirclePolygonSides = 720;

// First failing trial of a campaign, enough to replay it.
struct Violation {
  std::uint64_t trial = 0;
  double margin = 0.0;
  std::vector<Point> points;
};

struct SampleReport {
  std::string property_id;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;  // trials with margin < -tolerance
  double worst_slack = 0.0;      // smallest margin observed
  std::uint64_t seed = 0;
  double tolerance = kInequalitySlack;
  double allowance = 0.0;  // subtracted from the bound before comparing
  std::optional<Violation> first_violation;

  bool clean() const { return violations == 0; }
};

// Deterministic 64-bit generator: seed_seq-initialized Mersenne twister with
// a portable mapping to doubles.
class ConfigSampler {
 public:
  ConfigSampler(std::uint64_t seed, std::string_view property_id,
                std::uint64_t stream);

  double uniform(double lo, double hi);
  Point point_in_box(Point center, double half_extent);
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

// Trials are split into fixed-size chunks with independent streams, so
// reports are identical for any worker count.
inline constexpr std::uint64_t kTrialsPerChunk = 1024;

SampleReport check_four_point_lemma(std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers = 1);
SampleReport check_rectangle_proposition(std::uint64_t trials,
                                         std::uint64_t seed,
                                         unsigned workers = 1);
// Reports for p, q, f, g in that order.
std::vector<SampleReport> check_section3_bounds(std::uint64_t trials,
                                                std::uint64_t seed,
                                                unsigned workers = 1,
                                                double b0 = kBroadwormBreadth);
// Reports for p_closed, g_closed.
std::vector<SampleReport> check_section4_bounds(std::uint64_t trials,
                                                std::uint64_t seed,
                                                unsigned workers = 1);
SampleReport hull_oracle_equivalence(std::uint64_t trials, std::uint64_t seed,
                                     int max_points, unsigned workers = 1);

// Exhaustive hull: a point is a vertex unless it lies in a closed
// non-degenerate triangle or closed segment of other points. Vertices come
// back CCW (angular order about their centroid), duplicates removed.
PointSet brute_force_hull(std::span<const Point> points);
double brute_force_area(std::span<const Point> points);

// Regular polygon inscribed in the circle of unit circumference.
PointSet circle_polygon(Point center, double rotation,
                        int sides = kCirclePolygonSides);

// Rectangle with side AB along `angle`, counterclockwise A, B, C, D.
Quad make_rectangle(Point center, double angle, double ab, double bc);

// Right-hand side of the rectangle-plus-four-points inequality.
double rectangle_bound(const Quad& r, const Segment& ef, const Segment& pq);

}  // namespace coverbound

#endif  // COVERBOUND_ORACLE_HPP
