#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "coverbound/geometry.hpp"
#include "coverbound/oracle.hpp"

using namespace coverbound;

namespace {

std::vector<Point> random_points(std::mt19937_64& rng, int n, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return pts;
}

bool same_vertex_set(PointSet a, PointSet b) {
  const auto less = [](Point p, Point q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

TEST_CASE("orient sign and magnitude") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1.0);
  CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0.0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1.0);
}

TEST_CASE("convex hull drops interior points") {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const PointSet hull = convex_hull(pts);
  REQUIRE(hull.size() == 4);
  CHECK(same_vertex_set(hull, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(signed_area(hull) > 0.0);
}

TEST_CASE("convex hull degenerate inputs") {
  CHECK(convex_hull(std::vector<Point>{{0, 0}}) == PointSet{{0, 0}});
  CHECK(convex_hull(std::vector<Point>{{2, 2}, {2, 2}, {2, 2}}) ==
        PointSet{{2, 2}});
  const PointSet line =
      convex_hull(std::vector<Point>{{1, 1}, {3, 3}, {0, 0}, {2, 2}});
  CHECK(line == PointSet{{0, 0}, {3, 3}});
  // Collinear points on an edge are not vertices.
  const PointSet tri = convex_hull(
      std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {0, 2}, {1, 1}});
  CHECK(tri.size() == 3);
  CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull(std::vector<Point>{{0, NAN}}),
                  std::invalid_argument);
}

TEST_CASE("hull of random disk points matches brute force") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Point> pts;
    for (int i = 0; i < 50; ++i) {
      const double r = std::sqrt(u(rng));
      const double t = 2 * 3.141592653589793 * u(rng);
      pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    CHECK(same_vertex_set(convex_hull(pts), brute_force_hull(pts)));
  }
}

TEST_CASE("mu examples") {
  CHECK(mu(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mu(std::vector<Point>{{0, 0}, {1, 0}, {0.5, 1}, {0.5, -1}}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mu(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}) == 0.0);
  CHECK(mu(std::vector<Point>{{4, 4}}) == 0.0);
  CHECK_THROWS_AS(mu(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("mu agrees with the fan-triangulated brute-force hull") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto pts = random_points(rng, n);
    CHECK(std::abs(mu(pts) - brute_force_area(pts)) < 1e-12);
  }
}

TEST_CASE("height examples") {
  CHECK(height({{0, 0}, {1, 0}}, {{0.3, 2}, {0.9, -1}}) ==
        doctest::Approx(3.0).epsilon(1e-15));
  CHECK(height({{0, 0}, {0, 1}}, {{2, 5}, {7, 9}}) ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK(height({{0, 0}, {2, 1}}, {{5, 5}, {9, 7}}) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(height({{1, 1}, {1, 1}}, {{0, 0}, {1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("height is symmetric and translation invariant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int rep = 0; rep < 1000; ++rep) {
    const Segment ref{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Segment s{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Point shift{u(rng), u(rng)};
    const double h = height(ref, s);
    CHECK(h == height(ref, {s.b, s.a}));
    CHECK(std::abs(h - height(ref, {s.a + shift, s.b + shift})) < 1e-12);
    CHECK(std::abs(h - height({ref.a + shift, ref.b + shift}, s)) < 1e-12);
  }
}

TEST_CASE("hull is idempotent and mu is monotone") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 12);
    auto pts = random_points(rng, n);
    const PointSet hull = convex_hull(pts);
    CHECK(convex_hull(hull) == hull);

    const double before = mu(pts);
    auto more = pts;
    more.push_back(random_points(rng, 1, 2.0).front());
    CHECK(before <= mu(more) + 1e-12);
  }
}

TEST_CASE("four-point lemma on random quadruples") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 5000; ++rep) {
    const auto pts = random_points(rng, 4, 2.0);
    const Point e = pts[0], f = pts[1], p = pts[2], q = pts[3];
    if (distance(e, f) < 1e-6) continue;
    const double bound = 0.5 * distance(e, f) * height({e, f}, {p, q});
    CHECK(mu(pts) >= bound - kInequalitySlack);
  }
}

TEST_CASE("four-point lemma is tight for convex quadrilaterals split by EF") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::uniform_real_distribution<double> h(0.1, 2.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  for (int rep = 0; rep < 1000; ++rep) {
    // Build in a frame where EF is [0, L] on the x-axis, then rotate.
    const double len = h(rng);
    const double t = ang(rng);
    const auto place = [&](double x, double y) {
      return Point{x * std::cos(t) - y * std::sin(t),
                   x * std::sin(t) + y * std::cos(t)};
    };
    const Point e = place(0, 0), f = place(len, 0);
    const Point p = place(len * u(rng), h(rng));
    const Point q = place(len * u(rng), -h(rng));
    const std::vector<Point> pts{e, f, p, q};
    const double bound = 0.5 * distance(e, f) * height({e, f}, {p, q});
    CHECK(std::abs(mu(pts) - bound) <= 1e-9 * bound);
  }
}

TEST_CASE("rectangle proposition on random configurations") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> side(0.1, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  int checked = 0;
  while (checked < 3000) {
    const Quad r = make_rectangle(random_points(rng, 1).front(), ang(rng),
                                  side(rng), side(rng));
    const auto pts = random_points(rng, 4, 2.0);
    const Segment ef{pts[0], pts[1]}, pq{pts[2], pts[3]};
    if (!(height({r.b, r.c}, ef) > distance(r.a, r.b)) ||
        !(height({r.a, r.b}, pq) > distance(r.b, r.c))) {
      continue;
    }
    ++checked;
    const std::vector<Point> all{r.a, r.b, r.c, r.d, pts[0], pts[1], pts[2], pts[3]};
    CHECK(mu(all) >= rectangle_bound(r, ef, pq) - kInequalitySlack);
  }
}
