#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvt/axioms.hpp"
#include "qvt/document.hpp"
#include "qvt/harness.hpp"
#include "qvt/report.hpp"
#include "qvt/transitions.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSizeGuard = 4;
constexpr int kExitViolation = 5;

bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int guard_exit(const qvt::error& e) {
  if (e.code() == qvt::errc::size_guard ||
      e.code() == qvt::errc::budget_exceeded) {
    return kExitSizeGuard;
  }
  return kExitValidation;
}

void print_error(const qvt::error& e) {
  std::cerr << "error: " << qvt::errc_name(e.code()) << ": " << e.what();
  if (!e.subjects().empty()) {
    std::cerr << " [";
    for (std::size_t i = 0; i < e.subjects().size(); ++i) {
      if (i) std::cerr << ", ";
      std::cerr << e.subjects()[i];
    }
    std::cerr << "]";
  }
  std::cerr << "\n";
}

void print_diagnostics(const std::string& path,
                       const std::vector<qvt::Diagnostic>& diags) {
  for (const qvt::Diagnostic& d : diags) {
    std::cerr << path << ":" << d.line << ":" << d.column << ": " << d.severity
              << ": " << d.message << "\n";
    if (!d.hint.empty()) std::cerr << "  hint: " << d.hint << "\n";
  }
}

// 0 on success, kExitParse on read/parse failure.
int parse_file(const std::string& path, qvt::StructureDoc& doc) {
  std::string text;
  if (!slurp(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  qvt::ParseResult parsed = qvt::parse_document(text);
  print_diagnostics(path, parsed.diagnostics);
  if (!parsed.ok()) return kExitParse;
  doc = std::move(*parsed.doc);
  return 0;
}

int run_validate(const std::string& path) {
  qvt::StructureDoc doc;
  if (int rc = parse_file(path, doc)) return rc;
  try {
    qvt::Space space = qvt::load_space(doc);
    std::cout << "ok: " << qvt::presentation_name(space.presentation())
              << " presentation, " << space.carrier.size() << " points, "
              << space.quantale.size() << "-element quantale\n";
    return 0;
  } catch (const qvt::error& e) {
    print_error(e);
    return guard_exit(e);
  }
}

int run_check(const std::string& path, const std::string& axiom,
              const std::string& point, const std::string& method,
              int copies) {
  qvt::StructureDoc doc;
  if (int rc = parse_file(path, doc)) return rc;
  try {
    qvt::Space space = qvt::load_space(doc);
    const bool oracle = method == "oracle";
    std::vector<qvt::Verdict> verdicts;
    if (axiom == "dconn") {
      verdicts.push_back(oracle ? qvt::d_connected_oracle(space)
                                : qvt::d_connected(space));
    } else {
      std::vector<int> points;
      if (point.empty()) {
        for (int p = 0; p < space.carrier.size(); ++p) points.push_back(p);
      } else {
        points.push_back(space.carrier.index_of(point));
      }
      for (int p : points) {
        if (axiom == "t0") {
          verdicts.push_back(oracle ? qvt::t0_oracle(space, p)
                                    : qvt::t0_at(space, p));
        } else if (axiom == "t1") {
          verdicts.push_back(oracle ? qvt::t1_oracle(space, p)
                                    : qvt::t1_at(space, p));
        } else {
          verdicts.push_back(oracle
                                 ? qvt::closed_oracle(space, p, copies)
                                 : qvt::closed_at(space, p));
        }
      }
    }
    std::cout << qvt::serialize_verdicts(space, verdicts);
    return 0;
  } catch (const qvt::error& e) {
    print_error(e);
    return guard_exit(e);
  }
}

int run_transition(const std::string& path, const std::string& to,
                   const std::string& mode) {
  qvt::StructureDoc doc;
  if (int rc = parse_file(path, doc)) return rc;
  try {
    qvt::Space space = qvt::load_space(doc);
    qvt::Presentation target = qvt::Presentation::gauge;
    if (to == "distance") target = qvt::Presentation::distance;
    if (to == "system") target = qvt::Presentation::system;
    const qvt::Mode m =
        mode == "oracle" ? qvt::Mode::oracle : qvt::Mode::base;
    qvt::Space converted = qvt::transition(space, target, m);
    std::cout << qvt::print_document(qvt::document_from_space(converted));
    return 0;
  } catch (const qvt::error& e) {
    print_error(e);
    return guard_exit(e);
  }
}

int run_report(const std::string& path, const std::string& format) {
  qvt::StructureDoc doc;
  if (int rc = parse_file(path, doc)) return rc;
  try {
    qvt::Space space = qvt::load_space(doc);
    const qvt::Report report =
        qvt::full_report(space, qvt::Method::characterization);
    const qvt::ReportFormat f = format == "json" ? qvt::ReportFormat::json
                                                 : qvt::ReportFormat::text;
    std::cout << qvt::serialize_report(space, report, f);
    return 0;
  } catch (const qvt::error& e) {
    print_error(e);
    return guard_exit(e);
  }
}

int run_sweep(const std::string& config_path) {
  try {
    qvt::SweepConfig config;
    if (!config_path.empty()) {
      std::string text;
      if (!slurp(config_path, text)) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return kExitParse;
      }
      config = qvt::parse_sweep_config(text);
    }
    const qvt::SweepResult result = qvt::run_suite(config);
    const std::string json = qvt::findings_to_json(config, result);
    std::ofstream out(config.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << config.out << "\n";
      return kExitValidation;
    }
    out << json;
    out.close();
    std::cout << "checks " << result.checks << ", violations "
              << result.violations << ", divergences " << result.divergences
              << (result.budget_exhausted ? ", budget exhausted" : "")
              << "; findings written to " << config.out << "\n";
    if (result.violations > 0) return kExitViolation;
    return result.budget_exhausted ? kExitSizeGuard : 0;
  } catch (const qvt::error& e) {
    print_error(e);
    return guard_exit(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for finite quantale-valued approach spaces"};
  app.require_subcommand(1);

  std::string file, axiom, point, method = "char", to, mode = "base";
  std::string format = "text", config_path;
  int copies = 3;

  CLI::App* validate =
      app.add_subcommand("validate", "parse a document and check all axioms");
  validate->add_option("FILE", file, "document to load")->required();

  CLI::App* check =
      app.add_subcommand("check", "evaluate one axiom on a document");
  check->add_option("FILE", file, "document to load")->required();
  check->add_option("--axiom", axiom, "axiom to evaluate")
      ->required()
      ->check(CLI::IsMember({"t0", "t1", "closed", "dconn"}));
  check->add_option("--point", point, "point id (default: every point)");
  check->add_option("--method", method, "decision procedure")
      ->check(CLI::IsMember({"char", "oracle"}));
  check->add_option("--copies", copies,
                    "wedge copies for the closedness oracle");

  CLI::App* oracle =
      app.add_subcommand("oracle", "evaluate one axiom by its oracle");
  oracle->add_option("FILE", file, "document to load")->required();
  oracle->add_option("--axiom", axiom, "axiom to evaluate")
      ->required()
      ->check(CLI::IsMember({"t0", "t1", "closed", "dconn"}));
  oracle->add_option("--point", point, "point id (default: every point)");
  oracle->add_option("--copies", copies,
                     "wedge copies for the closedness oracle");

  CLI::App* transition =
      app.add_subcommand("transition", "convert between presentations");
  transition->add_option("FILE", file, "document to load")->required();
  transition->add_option("--to", to, "target presentation")
      ->required()
      ->check(CLI::IsMember({"gauge", "distance", "system"}));
  transition->add_option("--mode", mode, "infimum mode")
      ->check(CLI::IsMember({"base", "oracle"}));

  CLI::App* report =
      app.add_subcommand("report", "full verdict report for a document");
  report->add_option("FILE", file, "document to load")->required();
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* sweep =
      app.add_subcommand("sweep", "run the enumeration suites");
  sweep->add_option("--config", config_path, "JSON sweep configuration");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return run_validate(file);
  if (check->parsed()) return run_check(file, axiom, point, method, copies);
  if (oracle->parsed()) return run_check(file, axiom, point, "oracle", copies);
  if (transition->parsed()) return run_transition(file, to, mode);
  if (report->parsed()) return run_report(file, format);
  if (sweep->parsed()) return run_sweep(config_path);
  return 0;
}
