#include <cmath>

#include "doctest.h"

#include "coverbound/case_analysis.hpp"

using namespace coverbound;

TEST_CASE("interval membership respects open ends") {
  const Interval half_open{0.0, 1.0, true, false};
  CHECK(half_open.contains(0.0));
  CHECK(half_open.contains(0.5));
  CHECK_FALSE(half_open.contains(1.0));
  CHECK(half_open.closure().contains(1.0));
  const Interval open{0.0, 1.0, false, false};
  CHECK_FALSE(open.contains(0.0));
}

TEST_CASE("covers detects gaps at open endpoints") {
  const Interval target{0.0, 2.0, true, true};
  CHECK(covers(target, {{0.0, 1.0, true, true}, {1.0, 2.0, false, true}}));
  CHECK(covers(target, {{0.0, 1.0, true, false}, {1.0, 2.0, true, true}}));
  CHECK_FALSE(covers(target, {{0.0, 1.0, true, false}, {1.0, 2.0, false, true}}));
  CHECK_FALSE(covers(target, {{0.0, 0.9, true, true}, {1.0, 2.0, true, true}}));
  CHECK_FALSE(covers(target, {{0.0, 2.0, false, true}}));
  CHECK(covers(target, {{1.5, 2.0, true, true}, {-1.0, 1.6, true, true}}));
  CHECK_FALSE(covers(target, {}));
}

TEST_CASE("claims partition the canonical domain") {
  const auto claims = moser_case_claims();
  REQUIRE(claims.size() == 4);
  CHECK(claims[0].component == MoserComponent::p);
  CHECK(claims[1].component == MoserComponent::g);
  CHECK(claims[2].component == MoserComponent::q);
  CHECK(claims[3].component == MoserComponent::f);
  CHECK(claims[0].strict);
  CHECK_FALSE(claims[3].strict);
}

TEST_CASE("replicated case analysis") {
  const CaseReport report = replicate_case_analysis();
  REQUIRE(report.cases.size() == 4);

  CHECK(report.covers_domain);
  CHECK(report.overlaps.size() == 4);
  CHECK(report.corners_match());
  for (const CornerCheck& c : report.corners) {
    CHECK(std::abs(c.value - c.expected) <= 2e-6);
  }

  CHECK(report.cases[0].holds);
  CHECK(report.cases[3].holds);

  // The g claim falls short at the right end of its alpha range by
  // about 7.5e-6 with the stated breadth constant.
  const CaseResult& c2 = report.cases[1];
  CHECK(c2.status == Status::refuted);
  CHECK_FALSE(c2.holds);
  CHECK(c2.minimum.value == doctest::Approx(0.2322315).epsilon(1e-8));
  CHECK(c2.note.find("needs b0 >= 0.43892999") != std::string::npos);

  // The q claim misses by about 2.8e-11 at the inner beta edge.
  const CaseResult& c3 = report.cases[2];
  CHECK(c3.status == Status::refuted);
  CHECK(c3.minimum.value < case_split::kCase3Threshold);
  CHECK(case_split::kCase3Threshold - c3.minimum.value < 1e-10);

  CHECK_FALSE(report.all_cases_hold());
  CHECK_FALSE(report.ok());
}

TEST_CASE("the g claim holds with a slightly larger breadth") {
  const CaseReport report = replicate_case_analysis(0.43894);
  CHECK(report.cases[1].holds);
}
