#include "coverbound/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coverbound/parallel.hpp"

namespace coverbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slack on the argument range of cos so that rounding in the endpoints
// cannot hide an extremum.
constexpr double kArgumentPad = 1e-13;

bool better(const Witness& a, const Witness& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

Box full_moser_box() {
  const auto d = moser_domain();
  return {d.alpha_lo, d.alpha_hi, d.beta_lo, d.beta_hi};
}

Component make_p() {
  const double c = std::sqrt(5.0) / 8;
  return {"p", [](double a, double) { return p(a); },
          [c](const Box& b) {
            return Slopes{c * max_abs_cos(b.alpha_lo, b.alpha_hi), 0.0};
          },
          {c, 0.0}};
}

Component make_q() {
  return {"q", [](double, double b) { return q(b); },
          [](const Box& b) {
            const double lower =
                max_abs_cos(b.beta_lo - kPi / 6, b.beta_hi - kPi / 6);
            const double upper =
                max_abs_cos(b.beta_lo + kPi / 6, b.beta_hi + kPi / 6);
            return Slopes{0.0, 0.25 * std::max(lower, upper)};
          },
          {0.0, 0.25}};
}

Component make_f() {
  const double theta0 = rect_theta0();
  return {"f", [](double a, double b) { return f(a, b); },
          [theta0](const Box& b) {
            // df/dalpha = (cos u1 - cos u2) / 8, df/dbeta = cos u2 / 8.
            const CosRange side = cos_range(b.alpha_lo - theta0 + kPi / 2,
                                            b.alpha_hi - theta0 + kPi / 2);
            const CosRange cross =
                cos_range(b.beta_lo - b.alpha_hi + theta0 + kPi / 6,
                          b.beta_hi - b.alpha_lo + theta0 + kPi / 6);
            const double d_alpha = std::max(std::abs(side.lo - cross.hi),
                                            std::abs(side.hi - cross.lo));
            return Slopes{0.125 * d_alpha, 0.125 * cross.max_abs()};
          },
          {0.25, 0.125}};
}

Component make_g(double b0) {
  const double theta0 = rect_theta0();
  return {"g", [b0](double a, double) { return g(a, b0); },
          [theta0](const Box& b) {
            return Slopes{0.125 * max_abs_cos(b.alpha_lo - theta0 + kPi / 2,
                                              b.alpha_hi - theta0 + kPi / 2),
                          0.0};
          },
          {0.125, 0.0}};
}

enum class Outcome : std::uint8_t { accepted, split, unresolved, pruned };

struct BoxResult {
  Witness center;
  double lower = 0.0;
  Outcome outcome = Outcome::split;
};

std::pair<Box, Box> bisect(const Box& box) {
  Box left = box;
  Box right = box;
  if (box.alpha_hi - box.alpha_lo >= box.beta_hi - box.beta_lo) {
    const double mid = box.alpha_mid();
    left.alpha_hi = mid;
    right.alpha_lo = mid;
  } else {
    const double mid = box.beta_mid();
    left.beta_hi = mid;
    right.beta_lo = mid;
  }
  return {left, right};
}

}  // namespace

double Box::width() const {
  return std::max(alpha_hi - alpha_lo, beta_hi - beta_lo);
}

bool Box::contains(const Box& o) const {
  return o.alpha_lo >= alpha_lo && o.alpha_hi <= alpha_hi &&
         o.beta_lo >= beta_lo && o.beta_hi <= beta_hi;
}

double Objective::value(double alpha, double beta) const {
  double best = -kInf;
  for (const auto& c : components) best = std::max(best, c.value(alpha, beta));
  return best;
}

Slopes Objective::global_slopes() const {
  Slopes s;
  for (const auto& c : components) {
    s.alpha = std::max(s.alpha, c.global_slopes.alpha);
    s.beta = std::max(s.beta, c.global_slopes.beta);
  }
  return s;
}

Objective moser_objective(double b0) {
  Objective obj;
  obj.problem_id = "moser";
  obj.domain = full_moser_box();
  obj.b0 = b0;
  obj.components = {make_p(), make_q(), make_f(), make_g(b0)};
  return obj;
}

Objective closed_objective() {
  const auto d = closed_domain();
  Objective obj;
  obj.problem_id = "closed";
  obj.domain = {d.alpha_lo, d.alpha_hi, 0.0, 0.0};
  obj.uses_beta = false;
  const double cp = std::numbers::sqrt2 / 16;
  obj.components = {
      {"p_closed", [](double a, double) { return p_closed(a); },
       [cp](const Box& b) {
         return Slopes{cp * max_abs_cos(b.alpha_lo, b.alpha_hi), 0.0};
       },
       {cp, 0.0}},
      {"g_closed", [](double a, double) { return g_closed(a); },
       [](const Box& b) {
         return Slopes{0.0625 * max_abs_cos(b.alpha_lo + kPi / 4,
                                            b.alpha_hi + kPi / 4),
                       0.0};
       },
       {0.0625, 0.0}},
  };
  return obj;
}

Objective moser_component_objective(MoserComponent c, double b0) {
  Objective obj;
  obj.problem_id = "moser." + std::string(to_string(c));
  obj.domain = full_moser_box();
  switch (c) {
    case MoserComponent::p:
      obj.components = {make_p()};
      break;
    case MoserComponent::q:
      obj.components = {make_q()};
      break;
    case MoserComponent::f:
      obj.components = {make_f()};
      break;
    case MoserComponent::g:
      obj.components = {make_g(b0)};
      obj.b0 = b0;
      break;
  }
  if (c == MoserComponent::q) {
    obj.domain.alpha_lo = obj.domain.alpha_hi = obj.domain.alpha_mid();
  } else if (c != MoserComponent::f) {
    obj.domain.beta_lo = obj.domain.beta_hi = kPi / 2;
    obj.uses_beta = false;
  }
  return obj;
}

CosRange cos_range(double lo, double hi) {
  lo -= kArgumentPad;
  hi += kArgumentPad;
  const auto hits = [lo, hi](double offset) {
    // Some offset + 2k pi in [lo, hi].
    return std::ceil((lo - offset) / (2 * kPi)) * (2 * kPi) + offset <= hi;
  };
  const double c_lo = std::cos(lo);
  const double c_hi = std::cos(hi);
  return {hits(kPi) ? -1.0 : std::min(c_lo, c_hi),
          hits(0.0) ? 1.0 : std::max(c_lo, c_hi)};
}

double max_abs_cos(double lo, double hi) {
  return cos_range(lo, hi).max_abs();
}

std::string_view to_string(BoundMode mode) {
  return mode == BoundMode::global_lipschitz ? "global_lipschitz"
                                             : "local_lipschitz";
}

std::optional<BoundMode> parse_bound_mode(std::string_view name) {
  if (name == "global_lipschitz" || name == "global") {
    return BoundMode::global_lipschitz;
  }
  if (name == "local_lipschitz" || name == "local") {
    return BoundMode::local_lipschitz;
  }
  return std::nullopt;
}

double box_lower_bound(const Objective& objective, const Box& box,
                       BoundMode mode) {
  const double a = box.alpha_mid();
  const double b = box.beta_mid();
  const double ra = box.alpha_radius();
  const double rb = box.beta_radius();
  if (mode == BoundMode::global_lipschitz) {
    const Slopes s = objective.global_slopes();
    return objective.value(a, b) - s.alpha * ra - s.beta * rb -
           kEvaluationFudge;
  }
  double best = -kInf;
  for (const auto& c : objective.components) {
    const Slopes s = c.local_slopes(box);
    best = std::max(best, c.value(a, b) - s.alpha * ra - s.beta * rb);
  }
  return best - kEvaluationFudge;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::proved: return "proved";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Certificate certify(const Objective& objective, const CertifyOptions& options) {
  return certify(objective, objective.domain, options);
}

Certificate certify(const Objective& objective, const Box& domain,
                    const CertifyOptions& options) {
  if (!(options.min_box_width > 0.0) || options.max_boxes == 0) {
    throw std::invalid_argument("certify: budget parameters must be positive");
  }
  if (!domain.valid() || !objective.domain.contains(domain)) {
    throw std::invalid_argument("certify: domain outside objective domain");
  }

  Certificate cert;
  cert.problem = objective.problem_id;
  cert.threshold = options.threshold;
  cert.b0 = objective.b0;
  cert.uses_beta = objective.uses_beta;
  cert.domain = domain;
  cert.params = options;
  cert.witness = {domain.alpha_mid(), domain.beta_mid(), kInf};

  bool refuted = false;
  std::vector<Box> level{domain};
  std::vector<BoxResult> results;
  std::vector<Box> next;

  for (int depth = 0; !level.empty(); ++depth) {
    if (cert.boxes_processed + level.size() > options.max_boxes) {
      cert.budget_exhausted = true;
      break;
    }
    cert.max_depth = depth;

    const double incumbent = cert.witness.value;
    const bool minimizing = refuted;
    results.assign(level.size(), {});
    parallel_for(level.size(), options.workers, [&](std::size_t i) {
      const Box& box = level[i];
      BoxResult& r = results[i];
      const double a = box.alpha_mid();
      const double b = box.beta_mid();
      r.center = {a, b, objective.value(a, b)};
      r.lower = box_lower_bound(objective, box, options.mode);
      const bool narrow = box.width() <= options.min_box_width;
      if (minimizing) {
        r.outcome = r.lower >= incumbent ? Outcome::pruned
                    : narrow             ? Outcome::unresolved
                                         : Outcome::split;
      } else {
        r.outcome = r.lower >= options.threshold ? Outcome::accepted
                    : narrow                     ? Outcome::unresolved
                                                 : Outcome::split;
      }
    });

    next.clear();
    for (std::size_t i = 0; i < level.size(); ++i) {
      const BoxResult& r = results[i];
      ++cert.boxes_processed;
      if (better(r.center, cert.witness)) cert.witness = r.center;
      if (r.center.value < options.threshold) refuted = true;
      switch (r.outcome) {
        case Outcome::accepted: {
          ++cert.accepted_boxes;
          const double margin = r.lower - options.threshold;
          cert.slack = cert.slack ? std::min(*cert.slack, margin) : margin;
          if (options.on_accept) options.on_accept(level[i], r.lower);
          break;
        }
        case Outcome::unresolved:
          if (!minimizing) ++cert.unresolved_boxes;
          break;
        case Outcome::split: {
          auto [left, right] = bisect(level[i]);
          next.push_back(left);
          next.push_back(right);
          break;
        }
        case Outcome::pruned:
          break;
      }
    }
    level.swap(next);
  }

  if (refuted) {
    cert.status = Status::refuted;
  } else if (cert.budget_exhausted || cert.unresolved_boxes > 0) {
    cert.status = Status::inconclusive;
  } else {
    cert.status = Status::proved;
  }
  return cert;
}

Witness find_min(const Objective& objective, const Box& domain, int grid_n,
                 int refine_iters, unsigned workers) {
  if (grid_n < 2) throw std::invalid_argument("find_min: grid_n must be >= 2");
  if (!domain.valid() || !objective.domain.contains(domain)) {
    throw std::invalid_argument("find_min: domain outside objective domain");
  }

  const auto axis = [](double lo, double hi, int n, int i) {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
  };
  const bool scan_alpha = domain.alpha_hi > domain.alpha_lo;
  const bool scan_beta = domain.beta_hi > domain.beta_lo;
  const int na = scan_alpha ? grid_n : 1;
  const int nb = scan_beta ? grid_n : 1;

  const auto scan = [&](double alo, double ahi, double blo, double bhi,
                        int ka, int kb) {
    std::vector<Witness> rows(static_cast<std::size_t>(ka));
    parallel_for(rows.size(), workers, [&](std::size_t i) {
      const double a = ka == 1 ? alo : axis(alo, ahi, ka, static_cast<int>(i));
      Witness best{a, blo, kInf};
      for (int j = 0; j < kb; ++j) {
        const double b = kb == 1 ? blo : axis(blo, bhi, kb, j);
        const Witness w{a, b, objective.value(a, b)};
        if (better(w, best)) best = w;
      }
      rows[i] = best;
    });
    Witness best = rows.front();
    for (const auto& w : rows) {
      if (better(w, best)) best = w;
    }
    return best;
  };

  Witness best = scan(domain.alpha_lo, domain.alpha_hi, domain.beta_lo,
                      domain.beta_hi, na, nb);
  double step_a = (domain.alpha_hi - domain.alpha_lo) / (grid_n - 1);
  double step_b = (domain.beta_hi - domain.beta_lo) / (grid_n - 1);
  constexpr int kZoom = 21;
  for (int it = 0; it < refine_iters; ++it) {
    const double alo = std::max(domain.alpha_lo, best.alpha - step_a);
    const double ahi = std::min(domain.alpha_hi, best.alpha + step_a);
    const double blo =
        scan_beta ? std::max(domain.beta_lo, best.beta - step_b) : best.beta;
    const double bhi =
        scan_beta ? std::min(domain.beta_hi, best.beta + step_b) : best.beta;
    const Witness w = scan(scan_alpha ? alo : best.alpha,
                           scan_alpha ? ahi : best.alpha, blo, bhi,
                           scan_alpha ? kZoom : 1, scan_beta ? kZoom : 1);
    if (better(w, best)) best = w;
    step_a /= 10.0;
    step_b /= 10.0;
  }
  return best;
}

}  // namespace coverbound
