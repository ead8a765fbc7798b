#include "coverbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coverbound {
namespace {

void check(bool ok, const char* what, double value) {
  if (!ok) {
    throw std::domain_error(std::string(what) +
                            " outside bound domain: " + std::to_string(value));
  }
}

void check_alpha(double alpha) {
  const auto d = moser_domain();
  check(alpha >= d.alpha_lo && alpha <= d.alpha_hi, "alpha", alpha);
}

void check_beta(double beta) {
  const auto d = moser_domain();
  check(beta >= d.beta_lo && beta <= d.beta_hi, "beta", beta);
}

void check_closed_alpha(double alpha) {
  const auto d = closed_domain();
  check(alpha >= d.alpha_lo && alpha <= d.alpha_hi, "alpha", alpha);
}

}  // namespace

MoserDomain moser_domain() {
  const double theta0 = rect_theta0();
  return {theta0, theta0 + kPi / 2, kPi / 3, 2 * kPi / 3};
}

ClosedDomain closed_domain() { return {kPi / 4, kPi / 2}; }

double p(double alpha) {
  check_alpha(alpha);
  return std::sqrt(5.0) / 8 * std::sin(alpha);
}

double q(double beta) {
  check_beta(beta);
  return 0.25 * std::max(std::sin(beta - kPi / 6), std::sin(beta + kPi / 6));
}

double f(double alpha, double beta) {
  check_alpha(alpha);
  check_beta(beta);
  const double theta0 = rect_theta0();
  return 0.125 * (std::sin(alpha - theta0 + kPi / 2) +
                  std::sin(beta - alpha + theta0 + kPi / 6));
}

double g(double alpha, double b0) {
  check_alpha(alpha);
  check(b0 > 0.0, "b0", b0);
  return 0.25 * (0.5 * std::sin(alpha - rect_theta0() + kPi / 2) + b0);
}

std::string_view to_string(MoserComponent c) {
  switch (c) {
    case MoserComponent::p: return "p";
    case MoserComponent::q: return "q";
    case MoserComponent::f: return "f";
    case MoserComponent::g: return "g";
  }
  return "?";
}

MoserValue F(double alpha, double beta, double b0) {
  MoserValue best{p(alpha), MoserComponent::p};
  const auto consider = [&best](double v, MoserComponent c) {
    if (v > best.value) best = {v, c};
  };
  consider(q(beta), MoserComponent::q);
  consider(f(alpha, beta), MoserComponent::f);
  consider(g(alpha, b0), MoserComponent::g);
  return best;
}

double p_closed(double alpha) {
  check_closed_alpha(alpha);
  return std::sqrt(2.0) / 16 * std::sin(alpha);
}

double g_closed(double alpha, double circle_width) {
  check_closed_alpha(alpha);
  check(circle_width > 0.0, "circle width", circle_width);
  return 0.125 * (0.5 * std::sin(alpha + kPi / 4) + circle_width);
}

double G(double alpha, double circle_width) {
  return std::max(p_closed(alpha), g_closed(alpha, circle_width));
}

}  // namespace coverbound
