#include "coverbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace coverbound {
namespace {

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json box_json(const Box& box, bool uses_beta) {
  Json j;
  j["alpha"] = {box.alpha_lo, box.alpha_hi};
  j["beta"] = uses_beta ? Json{box.beta_lo, box.beta_hi} : Json(nullptr);
  return j;
}

Json interval_json(const Interval& iv) {
  Json j;
  j["lo"] = iv.lo;
  j["hi"] = iv.hi;
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  return j;
}

void write(std::string& out, const Json& v, int indent, int level) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, level + 1);
      }
      newline(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += indent < 0 ? "," : ", ";
        first = false;
        write(out, item, indent, level + 1);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  write(out, value, indent, 0);
  return out;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["problem"] = cert.problem;
  j["threshold"] = cert.threshold;
  j["status"] = std::string(to_string(cert.status));
  j["boxes_processed"] = cert.boxes_processed;
  j["max_depth"] = cert.max_depth;
  j["slack"] = optional_number(cert.slack);
  j["b0"] = optional_number(cert.b0);
  Json w;
  w["alpha"] = cert.witness.alpha;
  w["beta"] = cert.uses_beta ? Json(cert.witness.beta) : Json(nullptr);
  w["value"] = cert.witness.value;
  j["witness"] = w;
  Json params;
  params["min_box_width"] = cert.params.min_box_width;
  params["max_boxes"] = cert.params.max_boxes;
  params["bound_mode"] = std::string(to_string(cert.params.mode));
  j["params"] = params;
  j["domain"] = box_json(cert.domain, cert.uses_beta);
  j["accepted_boxes"] = cert.accepted_boxes;
  j["unresolved_boxes"] = cert.unresolved_boxes;
  j["budget_exhausted"] = cert.budget_exhausted;
  return j;
}

Json to_json(const SampleReport& report) {
  Json j;
  j["property_id"] = report.property_id;
  j["trials"] = report.trials;
  j["violations"] = report.violations;
  j["worst_slack"] = report.worst_slack;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["allowance"] = report.allowance;
  if (report.first_violation) {
    Json v;
    v["trial"] = report.first_violation->trial;
    v["margin"] = report.first_violation->margin;
    Json pts = Json::array();
    for (const Point& p : report.first_violation->points) {
      pts.push_back({p.x, p.y});
    }
    v["points"] = pts;
    j["first_violation"] = v;
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

Json to_json(const CaseReport& report) {
  Json j;
  j["b0"] = report.b0;
  Json cases = Json::array();
  for (const CaseResult& c : report.cases) {
    Json cj;
    cj["id"] = c.claim.id;
    cj["component"] = std::string(to_string(c.claim.component));
    cj["threshold"] = c.claim.threshold;
    cj["strict"] = c.claim.strict;
    cj["alpha"] = interval_json(c.claim.alpha);
    Json betas = Json::array();
    for (const auto& b : c.claim.beta) betas.push_back(interval_json(b));
    cj["beta"] = betas;
    cj["status"] = std::string(to_string(c.status));
    cj["holds"] = c.holds;
    Json m;
    m["alpha"] = c.minimum.alpha;
    m["beta"] = c.minimum.beta;
    m["value"] = c.minimum.value;
    cj["minimum"] = m;
    Json certs = Json::array();
    for (const auto& cert : c.certificates) certs.push_back(to_json(cert));
    cj["certificates"] = certs;
    cj["note"] = c.note;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  Json corners = Json::array();
  for (const CornerCheck& c : report.corners) {
    Json cj;
    cj["alpha"] = c.alpha;
    cj["beta"] = c.beta;
    cj["expected"] = c.expected;
    cj["value"] = c.value;
    cj["matches"] = c.matches;
    corners.push_back(cj);
  }
  j["corner_tolerance"] = report.corner_tolerance;
  j["corners"] = corners;
  j["covers_domain"] = report.covers_domain;
  j["overlaps"] = report.overlaps;
  j["all_cases_hold"] = report.all_cases_hold();
  return j;
}

void write_moser_grid_csv(std::ostream& out, int n, double b0) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2");
  const auto d = moser_domain();
  const auto at = [n](double lo, double hi, int i) {
    return i == n - 1 ? hi : lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
  };
  out << "alpha,beta,p,q,f,g,F\n";
  for (int i = 0; i < n; ++i) {
    const double a = at(d.alpha_lo, d.alpha_hi, i);
    for (int k = 0; k < n; ++k) {
      const double b = at(d.beta_lo, d.beta_hi, k);
      out << format_double(a) << ',' << format_double(b) << ','
          << format_double(p(a)) << ',' << format_double(q(b)) << ','
          << format_double(f(a, b)) << ',' << format_double(g(a, b0)) << ','
          << format_double(F(a, b, b0).value) << '\n';
    }
  }
}

}  // namespace coverbound
