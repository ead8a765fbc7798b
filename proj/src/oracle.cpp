#include "coverbound/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "coverbound/bounds.hpp"
#include "coverbound/parallel.hpp"

namespace coverbound {
namespace {

struct TrialResult {
  double margin = 0.0;
  std::vector<Point> points;
};

using TrialFn = std::function<TrialResult(ConfigSampler&)>;

std::uint32_t fnv1a(std::string_view s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

SampleReport run_campaign(std::string id, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers,
                          double tolerance, double allowance,
                          const TrialFn& trial) {
  if (trials == 0) throw std::invalid_argument("campaign needs trials > 0");

  struct ChunkResult {
    std::uint64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::optional<Violation> first;
  };
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<ChunkResult> results(chunks);
  parallel_for(chunks, workers, [&](std::size_t c) {
    ConfigSampler sampler(seed, id, c);
    ChunkResult& r = results[c];
    const std::uint64_t begin = c * kTrialsPerChunk;
    const std::uint64_t end = std::min(trials, begin + kTrialsPerChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      TrialResult tr = trial(sampler);
      r.worst = std::min(r.worst, tr.margin);
      if (tr.margin < -tolerance) {
        ++r.violations;
        if (!r.first) r.first = Violation{t, tr.margin, std::move(tr.points)};
      }
    }
  });

  SampleReport report;
  report.property_id = std::move(id);
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tolerance;
  report.allowance = allowance;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (auto& r : results) {
    report.violations += r.violations;
    report.worst_slack = std::min(report.worst_slack, r.worst);
    if (!report.first_violation && r.first) report.first_violation = r.first;
  }
  return report;
}

template <std::size_t N>
void append(std::vector<Point>& out, const std::array<Point, N>& pts) {
  out.reserve(out.size() + N);
  for (const Point& p : pts) out.push_back(p);
}

double local_cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_closed_segment(Point a, Point b, Point p) {
  if (local_cross(a, b, p) != 0.0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool in_closed_triangle(Point a, Point b, Point c, Point p) {
  const double area = local_cross(a, b, c);
  if (area == 0.0) return false;
  const double s = area > 0.0 ? 1.0 : -1.0;
  return s * local_cross(a, b, p) >= 0.0 && s * local_cross(b, c, p) >= 0.0 &&
         s * local_cross(c, a, p) >= 0.0;
}

}  // namespace

ConfigSampler::ConfigSampler(std::uint64_t seed, std::string_view property_id,
                             std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), fnv1a(property_id),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double ConfigSampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point ConfigSampler::point_in_box(Point center, double half_extent) {
  const double x = uniform(-half_extent, half_extent);
  const double y = uniform(-half_extent, half_extent);
  return center + Point{x, y};
}

int ConfigSampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Quad make_rectangle(Point center, double angle, double ab, double bc) {
  const Point u = polar(angle);
  const Point v{-u.y, u.x};
  const Point hu = (0.5 * ab) * u;
  const Point hv = (0.5 * bc) * v;
  return {center - hu - hv, center + hu - hv, center + hu + hv,
          center - hu + hv};
}

double rectangle_bound(const Quad& r, const Segment& ef, const Segment& pq) {
  const double ab = distance(r.a, r.b);
  const double bc = distance(r.b, r.c);
  const double h_ef = height({r.b, r.c}, ef);
  const double h_pq = height({r.a, r.b}, pq);
  return 0.5 * (h_ef - ab) * bc + 0.5 * (h_pq - bc) * ab + ab * bc;
}

PointSet circle_polygon(Point center, double rotation, int sides) {
  const double radius = 0.5 * kCircleWidth;
  PointSet pts;
  pts.reserve(static_cast<std::size_t>(sides));
  for (int k = 0; k < sides; ++k) {
    pts.push_back(center + radius * polar(rotation + 2 * kPi * k / sides));
  }
  return pts;
}

SampleReport check_four_point_lemma(std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers) {
  return run_campaign(
      "four_point_lemma", trials, seed, workers, kInequalitySlack, 0.0,
      [](ConfigSampler& s) {
        Point e, f;
        do {
          e = s.point_in_box({}, 2.0);
          f = s.point_in_box({}, 2.0);
        } while (distance(e, f) < 1e-6);
        const Point p = s.point_in_box({}, 2.0);
        const Point q = s.point_in_box({}, 2.0);
        const std::array<Point, 4> pts{e, f, p, q};
        const double bound = 0.5 * distance(e, f) * height({e, f}, {p, q});
        return TrialResult{mu(pts) - bound, {pts.begin(), pts.end()}};
      });
}

SampleReport check_rectangle_proposition(std::uint64_t trials,
                                         std::uint64_t seed,
                                         unsigned workers) {
  return run_campaign(
      "rectangle_proposition", trials, seed, workers, kInequalitySlack, 0.0,
      [](ConfigSampler& s) {
        const Point center = s.point_in_box({}, 1.0);
        const double angle = s.uniform(0.0, 2 * kPi);
        const double ab = s.uniform(0.1, 1.0);
        const double bc = s.uniform(0.1, 1.0);
        const Quad r = make_rectangle(center, angle, ab, bc);

        // Rejection sampling; the range grows while acceptance stays low.
        double extent = 2.0;
        Point e, f, p, q;
        for (int attempt = 1;; ++attempt) {
          e = s.point_in_box(center, extent);
          f = s.point_in_box(center, extent);
          p = s.point_in_box(center, extent);
          q = s.point_in_box(center, extent);
          if (height({r.b, r.c}, {e, f}) > ab &&
              height({r.a, r.b}, {p, q}) > bc) {
            break;
          }
          if (attempt % 100 == 0) extent *= 1.5;
        }
        std::vector<Point> pts{r.a, r.b, r.c, r.d, e, f, p, q};
        const double margin = mu(pts) - rectangle_bound(r, {e, f}, {p, q});
        return TrialResult{margin, std::move(pts)};
      });
}

std::vector<SampleReport> check_section3_bounds(std::uint64_t trials,
                                                std::uint64_t seed,
                                                unsigned workers, double b0) {
  const auto d = moser_domain();
  const double theta0 = rect_theta0();

  struct Placement {
    SegVertices seg;
    Quad rect;
    Tri tri;
    double alpha, beta;
  };
  // Preconditions of the rectangle proposition depend on the angles only.
  const auto place = [=](ConfigSampler& s, bool need_side, bool need_cross) {
    double alpha, beta;
    do {
      alpha = s.uniform(d.alpha_lo, d.alpha_hi);
      beta = s.uniform(d.beta_lo, d.beta_hi);
    } while ((need_side && !(std::sin(alpha - theta0 + kPi / 2) > 0.5)) ||
             (need_cross &&
              !(0.5 * std::sin(beta - alpha + theta0 + kPi / 6) > 0.25)));
    Placement pl;
    pl.alpha = alpha;
    pl.beta = beta;
    pl.seg = seg_vertices({s.point_in_box({}, 1.0), 1.0});
    pl.rect = rect_vertices({s.point_in_box({}, 1.0), alpha});
    pl.tri = tri_vertices({s.point_in_box({}, 1.0), beta});
    return pl;
  };

  std::vector<SampleReport> out;
  out.push_back(run_campaign(
      "section3.p", trials, seed, workers, kInequalitySlack, 0.0,
      [=](ConfigSampler& s) {
        const Placement pl = place(s, false, false);
        std::vector<Point> pts{pl.seg.e, pl.seg.f};
        append(pts, pl.rect.points());
        return TrialResult{mu(pts) - p(pl.alpha), std::move(pts)};
      }));
  out.push_back(run_campaign(
      "section3.q", trials, seed, workers, kInequalitySlack, 0.0,
      [=](ConfigSampler& s) {
        const Placement pl = place(s, false, false);
        std::vector<Point> pts{pl.seg.e, pl.seg.f};
        append(pts, pl.tri.points());
        return TrialResult{mu(pts) - q(pl.beta), std::move(pts)};
      }));
  out.push_back(run_campaign(
      "section3.f", trials, seed, workers, kInequalitySlack, 0.0,
      [=](ConfigSampler& s) {
        const Placement pl = place(s, true, true);
        std::vector<Point> pts{pl.seg.e, pl.seg.f};
        append(pts, pl.rect.points());
        append(pts, pl.tri.points());
        return TrialResult{mu(pts) - f(pl.alpha, pl.beta), std::move(pts)};
      }));
  out.push_back(run_campaign(
      "section3.g", trials, seed, workers, kInequalitySlack, 0.0,
      [=](ConfigSampler& s) {
        const Placement pl = place(s, true, false);
        const BreadthWitness w = make_breadth_witness(
            {pl.rect.a, pl.rect.b}, s.point_in_box({}, 1.0),
            s.uniform(-1.0, 1.0), b0);
        std::vector<Point> pts{pl.seg.e, pl.seg.f, w.s, w.t};
        append(pts, pl.rect.points());
        return TrialResult{mu(pts) - g(pl.alpha, b0), std::move(pts)};
      }));
  return out;
}

std::vector<SampleReport> check_section4_bounds(std::uint64_t trials,
                                                std::uint64_t seed,
                                                unsigned workers) {
  const auto d = closed_domain();
  // An inscribed regular n-gon (n even) is narrower than the circle by the
  // factor cos(pi/n); the bound moves by 1/8 of the width loss.
  const double allowance =
      0.125 * kCircleWidth * (1.0 - std::cos(kPi / kCirclePolygonSides));

  std::vector<SampleReport> out;
  out.push_back(run_campaign(
      "section4.p_closed", trials, seed, workers, kInequalitySlack, 0.0,
      [=](ConfigSampler& s) {
        const double alpha = s.uniform(d.alpha_lo, d.alpha_hi);
        const SegVertices seg = seg_vertices({s.point_in_box({}, 1.0), 0.5});
        const Quad sq = square_vertices({s.point_in_box({}, 1.0), alpha});
        std::vector<Point> pts{seg.e, seg.f};
        append(pts, sq.points());
        return TrialResult{mu(pts) - p_closed(alpha), std::move(pts)};
      }));
  out.push_back(run_campaign(
      "section4.g_closed", trials, seed, workers, kInequalitySlack, allowance,
      [=](ConfigSampler& s) {
        const double alpha = s.uniform(d.alpha_lo, d.alpha_hi);
        const SegVertices seg = seg_vertices({s.point_in_box({}, 1.0), 0.5});
        const Quad sq = square_vertices({s.point_in_box({}, 1.0), alpha});
        std::vector<Point> pts =
            circle_polygon(s.point_in_box({}, 1.0), s.uniform(0.0, 2 * kPi));
        pts.push_back(seg.e);
        pts.push_back(seg.f);
        append(pts, sq.points());
        const double bound = g_closed(alpha) - allowance;
        return TrialResult{mu(pts) - bound, std::move(pts)};
      }));
  return out;
}

PointSet brute_force_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("brute_force_hull: empty");
  PointSet unique;
  for (const Point& p : points) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(p);
    }
  }
  const std::size_t n = unique.size();
  PointSet vertices;
  for (std::size_t i = 0; i < n; ++i) {
    bool extreme = true;
    for (std::size_t a = 0; a < n && extreme; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n && extreme; ++b) {
        if (b == i) continue;
        if (on_closed_segment(unique[a], unique[b], unique[i])) {
          extreme = false;
          break;
        }
        for (std::size_t c = b + 1; c < n; ++c) {
          if (c == i) continue;
          if (in_closed_triangle(unique[a], unique[b], unique[c], unique[i])) {
            extreme = false;
            break;
          }
        }
      }
    }
    if (extreme) vertices.push_back(unique[i]);
  }
  if (vertices.size() < 3) return vertices;

  Point centroid;
  for (const Point& v : vertices) centroid = centroid + v;
  centroid = (1.0 / static_cast<double>(vertices.size())) * centroid;
  std::sort(vertices.begin(), vertices.end(), [&](Point a, Point b) {
    return std::atan2(a.y - centroid.y, a.x - centroid.x) <
           std::atan2(b.y - centroid.y, b.x - centroid.x);
  });
  return vertices;
}

double brute_force_area(std::span<const Point> points) {
  const PointSet v = brute_force_hull(points);
  if (v.size() < 3) return 0.0;
  // Fan triangulation from the first vertex.
  double area = 0.0;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    area += 0.5 * local_cross(v[0], v[k], v[k + 1]);
  }
  return area;
}

SampleReport hull_oracle_equivalence(std::uint64_t trials, std::uint64_t seed,
                                     int max_points, unsigned workers) {
  if (max_points < 1 || max_points > 10) {
    throw std::invalid_argument("hull_oracle_equivalence: max_points in [1, 10]");
  }
  return run_campaign(
      "hull_oracle_equivalence", trials, seed, workers, kHullAgreement, 0.0,
      [max_points](ConfigSampler& s) {
        const int n = s.integer(1, max_points);
        std::vector<Point> pts;
        switch (s.integer(0, 3)) {
          case 0:  // general position
            for (int i = 0; i < n; ++i) pts.push_back(s.point_in_box({}, 1.0));
            break;
          case 1: {  // exactly collinear along an axis
            const bool vertical = s.integer(0, 1) == 1;
            const double c = s.uniform(-1.0, 1.0);
            for (int i = 0; i < n; ++i) {
              const double t = s.uniform(-1.0, 1.0);
              pts.push_back(vertical ? Point{c, t} : Point{t, c});
            }
            break;
          }
          case 2:  // small lattice: duplicates and collinear triples
            for (int i = 0; i < n; ++i) {
              pts.push_back({static_cast<double>(s.integer(0, 3)),
                             static_cast<double>(s.integer(0, 3))});
            }
            break;
          default:  // explicit duplicates
            for (int i = 0; i < n; ++i) {
              if (i > 0 && s.integer(0, 2) == 0) {
                pts.push_back(pts[static_cast<std::size_t>(s.integer(0, i - 1))]);
              } else {
                pts.push_back(s.point_in_box({}, 1.0));
              }
            }
            break;
        }
        const double diff = std::abs(mu(pts) - brute_force_area(pts));
        return TrialResult{-diff, std::move(pts)};
      });
}

}  // namespace coverbound
