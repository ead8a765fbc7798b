#ifndef COVERBOUND_CASE_ANALYSIS_HPP
#define COVERBOUND_CASE_ANALYSIS_HPP

#include <string>
#include <vector>

#include "coverbound/certifier.hpp"

namespace coverbound {

// Interval with open or closed ends.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const;
  Interval closure() const { return {lo, hi, true, true}; }
};

// True iff the union of `pieces` contains every point of `target`.
bool covers(const Interval& target, const std::vector<Interval>& pieces);

// Endpoints of the four-way split of the canonical Moser domain.
namespace case_split {
inline constexpr double kCase1AlphaLo = 0.980693572;
inline constexpr double kCase2AlphaHi = 0.663720973;
inline constexpr double kCase3BetaOffset = 0.1443850667;
inline constexpr double kCase4AlphaLo = 0.663720972;
inline constexpr double kCase4AlphaHi = 0.980693573;
inline constexpr double kCase4BetaOffset = 0.1443850668;

inline constexpr double kCase1Threshold = 0.23223900008;
inline constexpr double kCase2Threshold = 0.232239000003;
inline constexpr double kCase3Threshold = 0.232239000012;
inline constexpr double kCase4Threshold = 0.232239210;
}  // namespace case_split

struct CaseClaim {
  std::string id;
  MoserComponent component;
  double threshold;
  bool strict;  // claim is component > threshold
  Interval alpha;
  std::vector<Interval> beta;  // the claim covers the union
};

// The four claims, in order.
std::vector<CaseClaim> moser_case_claims();

struct CaseResult {
  CaseClaim claim;
  std::vector<Certificate> certificates;  // one per closed sub-box
  Witness minimum;  // find_min over the closure of the subdomain
  Status status = Status::inconclusive;
  bool holds = false;
  std::string note;
};

struct CornerCheck {
  double alpha;
  double beta;
  double expected;
  double value;
  bool matches;  // |value - expected| <= tolerance
};

struct CaseReport {
  double b0 = kBroadwormBreadth;
  double corner_tolerance = 2e-6;
  std::vector<CaseResult> cases;
  std::vector<CornerCheck> corners;
  bool covers_domain = false;
  std::vector<std::string> overlaps;

  bool all_cases_hold() const;
  bool corners_match() const;
  bool ok() const { return all_cases_hold() && corners_match() && covers_domain; }
};

// Certifies each claim on the closure of its subdomain. A strict claim holds
// when every box clears the threshold with positive slack. A claim is
// refuted when the certifier finds a lower center value or the minimum over
// the closure falls below the threshold; with continuous components the
// latter exhibits points of the half-open subdomain below the threshold.
CaseReport replicate_case_analysis(double b0 = kBroadwormBreadth,
                                   const CertifyOptions& base = {});

}  // namespace coverbound

#endif  // COVERBOUND_CASE_ANALYSIS_HPP
