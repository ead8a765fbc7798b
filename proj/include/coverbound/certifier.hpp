#ifndef COVERBOUND_CERTIFIER_HPP
#define COVERBOUND_CERTIFIER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverbound/bounds.hpp"

namespace coverbound {

// Axis-aligned box in (alpha, beta). One-dimensional problems collapse the
// unused axis to a single value, which is never bisected.
struct Box {
  double alpha_lo = 0.0, alpha_hi = 0.0;
  double beta_lo = 0.0, beta_hi = 0.0;

  double alpha_mid() const { return 0.5 * (alpha_lo + alpha_hi); }
  double beta_mid() const { return 0.5 * (beta_lo + beta_hi); }
  double alpha_radius() const { return 0.5 * (alpha_hi - alpha_lo); }
  double beta_radius() const { return 0.5 * (beta_hi - beta_lo); }
  double width() const;
  bool contains(const Box& other) const;
  bool valid() const { return alpha_lo <= alpha_hi && beta_lo <= beta_hi; }
};

struct Slopes {
  double alpha = 0.0;
  double beta = 0.0;
};

// One max-term of an objective together with bounds on its partial
// derivatives: `local_slopes(box)` must bound |d/dalpha| and |d/dbeta| over
// the whole box, and `global_slopes` over the whole domain.
struct Component {
  std::string name;
  std::function<double(double alpha, double beta)> value;
  std::function<Slopes(const Box&)> local_slopes;
  Slopes global_slopes;
};

// Pointwise maximum of its components.
struct Objective {
  std::string problem_id;
  Box domain;
  bool uses_beta = true;
  std::optional<double> b0;
  std::vector<Component> components;

  double value(double alpha, double beta) const;
  Slopes global_slopes() const;
};

Objective moser_objective(double b0 = kBroadwormBreadth);
Objective closed_objective();
// Single-component objective on the canonical Moser domain. For q the alpha
// axis is collapsed; for p and g the beta axis is.
Objective moser_component_objective(MoserComponent c,
                                    double b0 = kBroadwormBreadth);

// Enclosure of cos u over u in [lo, hi], padded against rounding.
struct CosRange {
  double lo;
  double hi;

  double max_abs() const { return std::max(-lo, hi); }
};
CosRange cos_range(double lo, double hi);

// max |cos u| over u in [lo, hi].
double max_abs_cos(double lo, double hi);

enum class BoundMode {
  // value(center) - L_alpha r_alpha - L_beta r_beta with the objective's
  // domain-wide constants.
  global_lipschitz,
  // max over components of component(center) - slopes(box) . radii, using
  // derivative bounds restricted to the box.
  local_lipschitz,
};

std::string_view to_string(BoundMode mode);
std::optional<BoundMode> parse_bound_mode(std::string_view name);

// Subtracted from every box bound to cover evaluation rounding.
inline constexpr double kEvaluationFudge = 1e-12;

// Certified lower bound of the objective over `box`.
double box_lower_bound(const Objective& objective, const Box& box,
                       BoundMode mode = BoundMode::local_lipschitz);

enum class Status { proved, refuted, inconclusive };
std::string_view to_string(Status status);

struct Witness {
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;
};

struct CertifyOptions {
  double threshold = 0.0;
  double min_box_width = 1e-6;
  std::uint64_t max_boxes = 10'000'000;
  unsigned workers = 1;
  BoundMode mode = BoundMode::local_lipschitz;
  // Called for every accepted box with its bound, in a fixed order.
  std::function<void(const Box&, double)> on_accept;
};

struct Certificate {
  std::string problem;
  double threshold = 0.0;
  Status status = Status::inconclusive;
  std::uint64_t boxes_processed = 0;
  std::uint64_t accepted_boxes = 0;
  std::uint64_t unresolved_boxes = 0;  // at min width, bound below threshold
  bool budget_exhausted = false;
  int max_depth = 0;
  std::optional<double> slack;  // min over accepted boxes of bound - threshold
  std::optional<double> b0;
  bool uses_beta = true;
  Witness witness;  // lowest center evaluation seen
  Box domain;
  CertifyOptions params;
};

// Branch-and-bound over `domain`, processed one depth level at a time.
//
// A box is accepted when its lower bound reaches the threshold; otherwise it
// is bisected across its wider side until narrower than min_box_width. The
// first center evaluation below the threshold refutes the claim; from the
// following level on only boxes that may still contain a lower value than the
// current witness are refined, so the witness approaches the minimum.
// Running out of budget or hitting unresolved boxes gives inconclusive, never
// proved. Results do not depend on the number of workers.
Certificate certify(const Objective& objective, const Box& domain,
                    const CertifyOptions& options);
Certificate certify(const Objective& objective, const CertifyOptions& options);

// Dense grid scan of `domain` (grid_n points per used axis, endpoints
// included) followed by refine_iters rounds of zoomed 21-point grids around
// the incumbent. Returns an upper bound on the minimum.
Witness find_min(const Objective& objective, const Box& domain, int grid_n,
                 int refine_iters, unsigned workers = 1);

}  // namespace coverbound

#endif  // COVERBOUND_CERTIFIER_HPP
