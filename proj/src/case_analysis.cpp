#include "coverbound/case_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace coverbound {
namespace {

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

// Right neighborhood of x, and x itself when `need_point`, lies in `piece`.
bool extends_from(const Interval& piece, double x, bool need_point) {
  const bool starts =
      piece.lo < x || (piece.lo == x && (piece.lo_closed || !need_point));
  return starts && piece.hi > x;
}

void add_overlaps(const std::vector<std::pair<std::string, Interval>>& pieces,
                  const char* axis, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Interval& a = pieces[i].second;
      const Interval& b = pieces[j].second;
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (hi > lo) {
        out.push_back(pieces[i].first + "/" + pieces[j].first + " " + axis +
                      format(" overlap [%.12g, %.12g], width %.3g", lo, hi,
                             hi - lo));
      }
    }
  }
}

}  // namespace

bool Interval::contains(double x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool covers(const Interval& target, const std::vector<Interval>& pieces) {
  double x = target.lo;
  bool need_point = target.lo_closed;
  while (x < target.hi) {
    const Interval* best = nullptr;
    for (const auto& piece : pieces) {
      if (!extends_from(piece, x, need_point)) continue;
      if (!best || piece.hi > best->hi ||
          (piece.hi == best->hi && piece.hi_closed && !best->hi_closed)) {
        best = &piece;
      }
    }
    if (!best) return false;
    x = best->hi;
    need_point = !best->hi_closed;
  }
  if (x == target.hi && need_point && target.hi_closed) {
    return std::any_of(pieces.begin(), pieces.end(),
                       [&](const Interval& p) { return p.contains(x); });
  }
  return true;
}

std::vector<CaseClaim> moser_case_claims() {
  using namespace case_split;
  const auto d = moser_domain();
  const Interval alpha_full{d.alpha_lo, d.alpha_hi, true, true};
  const Interval beta_full{d.beta_lo, d.beta_hi, true, true};
  return {
      {"case1", MoserComponent::p, kCase1Threshold, true,
       {kCase1AlphaLo, d.alpha_hi, false, true}, {beta_full}},
      {"case2", MoserComponent::g, kCase2Threshold, true,
       {d.alpha_lo, kCase2AlphaHi, true, false}, {beta_full}},
      {"case3", MoserComponent::q, kCase3Threshold, true, alpha_full,
       {{d.beta_lo, kPi / 2 - kCase3BetaOffset, true, false},
        {kPi / 2 + kCase3BetaOffset, d.beta_hi, false, true}}},
      {"case4", MoserComponent::f, kCase4Threshold, false,
       {kCase4AlphaLo, kCase4AlphaHi, true, true},
       {{kPi / 2 - kCase4BetaOffset, kPi / 2 + kCase4BetaOffset, true, true}}},
  };
}

bool CaseReport::all_cases_hold() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.holds; });
}

bool CaseReport::corners_match() const {
  return !corners.empty() &&
         std::all_of(corners.begin(), corners.end(),
                     [](const CornerCheck& c) { return c.matches; });
}

CaseReport replicate_case_analysis(double b0, const CertifyOptions& base) {
  using namespace case_split;
  CaseReport report;
  report.b0 = b0;

  for (const CaseClaim& claim : moser_case_claims()) {
    CaseResult result;
    result.claim = claim;
    const Objective obj = moser_component_objective(claim.component, b0);

    CertifyOptions opts = base;
    opts.threshold = claim.threshold;
    result.minimum.value = std::numeric_limits<double>::infinity();
    bool refuted = false;
    bool proved = true;
    bool positive = true;
    for (const Interval& beta : claim.beta) {
      Box box = obj.domain;
      if (obj.domain.alpha_hi > obj.domain.alpha_lo) {
        box.alpha_lo = claim.alpha.lo;
        box.alpha_hi = claim.alpha.hi;
      }
      if (obj.domain.beta_hi > obj.domain.beta_lo) {
        box.beta_lo = beta.lo;
        box.beta_hi = beta.hi;
      }
      Certificate cert = certify(obj, box, opts);
      refuted = refuted || cert.status == Status::refuted;
      proved = proved && cert.status == Status::proved;
      positive = positive && cert.slack && *cert.slack > 0.0;

      const bool two_d = box.alpha_hi > box.alpha_lo && box.beta_hi > box.beta_lo;
      const Witness w = find_min(obj, box, two_d ? 401 : 4001, 10, base.workers);
      if (w.value < result.minimum.value) result.minimum = w;
      result.certificates.push_back(std::move(cert));
    }
    if (result.minimum.value < claim.threshold) refuted = true;

    result.status = refuted  ? Status::refuted
                    : proved ? Status::proved
                             : Status::inconclusive;
    result.holds = result.status == Status::proved && (!claim.strict || positive);

    if (result.status == Status::refuted) {
      result.note = format("minimum over the closure is %.15g, below %.15g",
                           result.minimum.value, claim.threshold);
      if (claim.component == MoserComponent::g) {
        // g decreases in alpha, so its infimum sits at the right end.
        const double needed =
            4 * claim.threshold -
            0.5 * std::sin(claim.alpha.hi - rect_theta0() + kPi / 2);
        result.note += format("; needs b0 >= %.15g", needed);
      } else if (claim.component == MoserComponent::q) {
        const double offset = std::asin(4 * claim.threshold) - kPi / 3;
        result.note += format("; holds for beta offsets >= %.15g", offset);
      }
    }
    report.cases.push_back(std::move(result));
  }

  const double a_lo = kCase4AlphaLo;
  const double a_hi = kCase4AlphaHi;
  const double b_lo = kPi / 2 - kCase4BetaOffset;
  const double b_hi = kPi / 2 + kCase4BetaOffset;
  const struct {
    double alpha, beta, expected;
  } corners[] = {{a_lo, b_lo, 0.245506},
                 {a_lo, b_hi, 0.234071},
                 {a_hi, b_lo, 0.232475},
                 {a_hi, b_hi, 0.232239210}};
  for (const auto& c : corners) {
    const double v = f(c.alpha, c.beta);
    report.corners.push_back({c.alpha, c.beta, c.expected, v,
                              std::abs(v - c.expected) <= report.corner_tolerance});
  }

  // A point is covered when its alpha lies in case 1 or 2, its beta in
  // case 3, or it lies in the case-4 box. That holds everywhere iff the
  // alpha pieces of cases 1, 2, 4 and the beta pieces of cases 3, 4 each
  // cover their axis.
  const auto& cl = report.cases;
  const auto d = moser_domain();
  const std::vector<std::pair<std::string, Interval>> alpha_pieces{
      {"case1", cl[0].claim.alpha},
      {"case2", cl[1].claim.alpha},
      {"case4", cl[3].claim.alpha}};
  const std::vector<std::pair<std::string, Interval>> beta_pieces{
      {"case3", cl[2].claim.beta[0]},
      {"case3", cl[2].claim.beta[1]},
      {"case4", cl[3].claim.beta[0]}};
  std::vector<Interval> alphas, betas;
  for (const auto& [name, iv] : alpha_pieces) alphas.push_back(iv);
  for (const auto& [name, iv] : beta_pieces) betas.push_back(iv);
  report.covers_domain =
      covers({d.alpha_lo, d.alpha_hi, true, true}, alphas) &&
      covers({d.beta_lo, d.beta_hi, true, true}, betas);
  add_overlaps(alpha_pieces, "alpha", report.overlaps);
  add_overlaps(beta_pieces, "beta", report.overlaps);
  return report;
}

}  // namespace coverbound
