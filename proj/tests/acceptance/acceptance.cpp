#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "coverbound/case_analysis.hpp"
#include "coverbound/certifier.hpp"
#include "coverbound/oracle.hpp"
#include "coverbound/report.hpp"
#include "coverbound/run.hpp"

using namespace coverbound;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Certificate timed_certify(const Objective& obj, double threshold, double& secs) {
  CertifyOptions opts;
  opts.threshold = threshold;
  Certificate cert;
  secs = seconds([&] { cert = certify(obj, opts); });
  return cert;
}

void criterion_moser() {
  double secs = 0;
  const Certificate cert = timed_certify(moser_objective(), kMoserThreshold, secs);
  const bool ok = cert.status == Status::proved && secs < 60.0;
  verdict(1, ok,
          "moser threshold 0.232239 " + std::string(to_string(cert.status)) + " in " +
              std::to_string(cert.boxes_processed) + " boxes, " +
              fmt("%.1f ms (limit 60 s)", secs * 1e3));
}

void criterion_closed() {
  double secs = 0;
  const Certificate cert = timed_certify(closed_objective(), kClosedThreshold, secs);
  const bool ok = cert.status == Status::proved && secs < 10.0;
  verdict(2, ok,
          "closed threshold 0.0879873 " + std::string(to_string(cert.status)) + " in " +
              std::to_string(cert.boxes_processed) + " boxes, " +
              fmt("%.1f ms (limit 10 s)", secs * 1e3));
}

void criterion_gap() {
  const Objective moser = moser_objective();
  const Objective closed = closed_objective();
  const Witness wf = find_min(moser, moser.domain, 2001, 8);
  const Witness wg = find_min(closed, closed.domain, 2001, 8);
  const double gap_f = wf.value - kMoserThreshold;
  const double gap_g = wg.value - kClosedThreshold;
  const bool ok = wf.value <= 0.23224 && wg.value <= 0.087988 && gap_f >= 0 &&
                  gap_f < 1e-5 && gap_g >= 0 && gap_g < 1e-6;
  verdict(3, ok,
          fmt("min F = %.13g", wf.value) + fmt(" (gap %.3g, limit 1e-05), ", gap_f) +
              fmt("min G = %.13g", wg.value) + fmt(" (gap %.3g, limit 1e-06)", gap_g));
}

void criterion_cases() {
  const CaseReport report = replicate_case_analysis();
  for (const CornerCheck& c : report.corners) {
    std::printf("  corner f(%.10f, %.10f) = %.10f expected %.9g diff %.2g%s\n", c.alpha,
                c.beta, c.value, c.expected, c.value - c.expected,
                c.matches ? "" : " MISMATCH");
  }
  int held = 0;
  for (const CaseResult& c : report.cases) {
    std::printf("  %s %c %.12g: %s [%s], minimum %.14g%s%s\n", c.claim.id.c_str(),
                c.claim.strict ? '>' : '=', c.claim.threshold,
                c.holds ? "certified" : "not certified",
                std::string(to_string(c.status)).c_str(), c.minimum.value,
                c.note.empty() ? "" : "; ", c.note.c_str());
    held += c.holds ? 1 : 0;
  }
  std::printf("  subdomains cover the canonical domain: %s\n",
              report.covers_domain ? "yes" : "no");
  verdict(4, report.ok(),
          std::string("corners ") + (report.corners_match() ? "match" : "differ") +
              " to 2e-06, " + std::to_string(held) + " of " +
              std::to_string(report.cases.size()) + " case claims certified");
}

std::vector<SampleReport> all_campaigns(std::uint64_t trials, std::uint64_t hull_trials,
                                        std::uint64_t seed, unsigned workers) {
  std::vector<SampleReport> out;
  out.push_back(check_four_point_lemma(trials, seed, workers));
  out.push_back(check_rectangle_proposition(trials, seed, workers));
  for (auto& r : check_section3_bounds(trials, seed, workers)) out.push_back(std::move(r));
  for (auto& r : check_section4_bounds(trials, seed, workers)) out.push_back(std::move(r));
  out.push_back(hull_oracle_equivalence(hull_trials, seed, 8, workers));
  return out;
}

std::vector<SampleReport> criterion_sampling() {
  std::vector<SampleReport> reports = all_campaigns(100'000, 10'000, kDefaultSeed, 1);
  bool ok = true;
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    const SampleReport& r = reports[i];
    std::printf("  %s: %llu trials, seed %llu, %llu violations, worst slack %.3g\n",
                r.property_id.c_str(), static_cast<unsigned long long>(r.trials),
                static_cast<unsigned long long>(r.seed),
                static_cast<unsigned long long>(r.violations), r.worst_slack);
    ok = ok && r.trials == 100'000 && r.clean() && r.tolerance == 1e-9;
    violations += r.violations;
  }
  verdict(5, ok,
          std::to_string(reports.size() - 1) + " campaigns of 1e5 trials, " +
              std::to_string(violations) + " violations at slack 1e-09, seed " +
              std::to_string(kDefaultSeed));
  return reports;
}

void criterion_hull(const SampleReport& random) {
  // Fixed degenerate sets on top of the random campaign, which already mixes
  // in axis-collinear, lattice and duplicated points.
  const std::vector<PointSet> fixed{
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
      {{0, 0}, {0, 0}, {0, 0}},
      {{0, 0}, {1, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 1}},
      {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}, {2, 1}, {1, 2}, {0, 1}},
      {{0.1, 0.3}, {0.7, 0.3}, {0.4, 0.3}, {0.4, 0.9}, {0.4, 0.5}},
      {{5, 5}}};
  double worst = 0;
  for (const PointSet& s : fixed) {
    worst = std::max(worst, std::abs(mu(s) - brute_force_area(s)));
  }
  const bool ok = random.trials == 10'000 && random.clean() && worst < 1e-12 &&
                  random.tolerance == 1e-12;
  verdict(6, ok,
          std::to_string(random.trials) + " random sets of <= 8 points, " +
              std::to_string(random.violations) + fmt(" disagreements, max |diff| %.3g; ",
                                                      -random.worst_slack) +
              std::to_string(fixed.size()) + fmt(" degenerate sets, max |diff| %.3g", worst));
}

std::string certificate_bytes(unsigned workers) {
  std::string out;
  for (double t : {kMoserThreshold, 0.233}) {
    CertifyOptions opts;
    opts.threshold = t;
    opts.workers = workers;
    out += dump_json(to_json(certify(moser_objective(), opts))) + "\n";
  }
  CertifyOptions opts;
  opts.threshold = kClosedThreshold;
  opts.workers = workers;
  out += dump_json(to_json(certify(closed_objective(), opts))) + "\n";
  return out;
}

std::string report_bytes(const std::vector<SampleReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += dump_json(to_json(r), -1) + "\n";
  return out;
}

void criterion_determinism(const std::vector<SampleReport>& first_run) {
  const std::string certs = certificate_bytes(1);
  const std::string reports = report_bytes(first_run);
  bool ok = true;
  std::string detail;
  const auto compare = [&](const std::string& what, unsigned workers, bool same) {
    ok = ok && same;
    if (!same) detail += " " + what + "@" + std::to_string(workers) + " differs;";
  };
  compare("certificates rerun", 1, certificate_bytes(1) == certs);
  for (unsigned w : {1u, 2u, 8u}) {
    compare("certificates", w, certificate_bytes(w) == certs);
    compare("reports", w,
            report_bytes(all_campaigns(100'000, 10'000, kDefaultSeed, w)) == reports);
  }
  verdict(7, ok,
          "certificates and sample reports byte-identical across a rerun and workers "
          "1, 2, 8" + (ok ? std::string() : ":" + detail));
}

}  // namespace

int main() {
  criterion_moser();
  criterion_closed();
  criterion_gap();
  criterion_cases();
  const std::vector<SampleReport> reports = criterion_sampling();
  criterion_hull(reports.back());
  criterion_determinism(reports);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
