#include "coverbound/run.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "coverbound/case_analysis.hpp"
#include "coverbound/oracle.hpp"
#include "coverbound/report.hpp"

namespace coverbound {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

CertifyOptions certify_options(const RunConfig& cfg, double threshold) {
  CertifyOptions o;
  o.threshold = threshold;
  o.min_box_width = cfg.min_box_width;
  o.max_boxes = cfg.max_boxes;
  o.workers = cfg.workers;
  o.mode = cfg.mode;
  return o;
}

int run_certify(const RunConfig& cfg, const Objective& obj, double threshold,
                std::ostream& log) {
  const Certificate cert = certify(obj, certify_options(cfg, threshold));
  const auto path = resolve_output_path(cfg);
  open_output(path) << dump_json(to_json(cert)) << '\n';
  log << cert.problem << ": " << to_string(cert.status) << " at threshold "
      << format_double(threshold) << " (" << cert.boxes_processed
      << " boxes, depth " << cert.max_depth << ", lowest center value "
      << format_double(cert.witness.value) << ") -> " << path.string() << '\n';
  return cert.status == Status::proved ? 0 : 1;
}

int run_cases(const RunConfig& cfg, std::ostream& log) {
  const CaseReport report =
      replicate_case_analysis(cfg.b0, certify_options(cfg, 0.0));
  const auto path = resolve_output_path(cfg);
  open_output(path) << dump_json(to_json(report)) << '\n';
  for (const auto& c : report.cases) {
    log << c.claim.id << " (" << to_string(c.claim.component) << "): "
        << (c.holds ? "holds" : "does not hold") << " ["
        << to_string(c.status) << "], minimum " << format_double(c.minimum.value)
        << (c.note.empty() ? "" : "; " + c.note) << '\n';
  }
  for (const auto& c : report.corners) {
    log << "corner f(" << format_double(c.alpha) << ", " << format_double(c.beta)
        << ") = " << format_double(c.value) << " expected "
        << format_double(c.expected) << (c.matches ? " ok" : " MISMATCH") << '\n';
  }
  log << "cases cover the domain: " << (report.covers_domain ? "yes" : "no")
      << " -> " << path.string() << '\n';
  return report.ok() ? 0 : 1;
}

int run_oracle(const RunConfig& cfg, std::ostream& log) {
  std::vector<SampleReport> reports;
  reports.push_back(check_four_point_lemma(cfg.trials, cfg.seed, cfg.workers));
  reports.push_back(
      check_rectangle_proposition(cfg.trials, cfg.seed, cfg.workers));
  for (auto& r : check_section3_bounds(cfg.trials, cfg.seed, cfg.workers, cfg.b0)) {
    reports.push_back(std::move(r));
  }
  for (auto& r : check_section4_bounds(cfg.trials, cfg.seed, cfg.workers)) {
    reports.push_back(std::move(r));
  }
  reports.push_back(
      hull_oracle_equivalence(cfg.hull_trials, cfg.seed, 8, cfg.workers));

  const auto path = resolve_output_path(cfg);
  auto out = open_output(path);
  bool clean = true;
  for (const auto& r : reports) {
    out << dump_json(to_json(r), -1) << '\n';
    clean = clean && r.clean();
    log << r.property_id << ": " << r.trials << " trials, " << r.violations
        << " violations, worst slack " << format_double(r.worst_slack) << '\n';
  }
  log << "-> " << path.string() << '\n';
  return clean ? 0 : 1;
}

int run_grid(const RunConfig& cfg, std::ostream& log) {
  const auto path = resolve_output_path(cfg);
  auto out = open_output(path);
  write_moser_grid_csv(out, cfg.grid_n, cfg.b0);
  log << cfg.grid_n * cfg.grid_n << " grid rows -> " << path.string() << '\n';
  return 0;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::certify_moser: return "certify-moser";
    case Command::certify_closed: return "certify-closed";
    case Command::replicate_cases: return "replicate-cases";
    case Command::oracle: return "oracle";
    case Command::grid: return "grid";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::certify_moser, Command::certify_closed,
                    Command::replicate_cases, Command::oracle, Command::grid}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string default_output_name(Command c) {
  switch (c) {
    case Command::certify_moser: return "certificate_moser.json";
    case Command::certify_closed: return "certificate_closed.json";
    case Command::replicate_cases: return "case_analysis.json";
    case Command::oracle: return "oracle_reports.jsonl";
    case Command::grid: return "moser_grid.csv";
  }
  return "output";
}

std::filesystem::path resolve_output_path(const RunConfig& cfg) {
  std::filesystem::path path = cfg.output_path.empty()
                                   ? default_output_name(cfg.command)
                                   : cfg.output_path;
  if (const char* dir = std::getenv(kOutputDirEnv);
      dir != nullptr && *dir != '\0' && path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  return path;
}

int run(const RunConfig& cfg, std::ostream& log) {
  switch (cfg.command) {
    case Command::certify_moser:
      return run_certify(cfg, moser_objective(cfg.b0),
                         cfg.threshold.value_or(kMoserThreshold), log);
    case Command::certify_closed:
      return run_certify(cfg, closed_objective(),
                         cfg.threshold.value_or(kClosedThreshold), log);
    case Command::replicate_cases:
      return run_cases(cfg, log);
    case Command::oracle:
      return run_oracle(cfg, log);
    case Command::grid:
      return run_grid(cfg, log);
  }
  return 2;
}

}  // namespace coverbound
