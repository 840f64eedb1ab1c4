// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Timing budgets and expected values are pinned here.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qvt/axioms.hpp"
#include "qvt/harness.hpp"
#include "qvt/report.hpp"

using namespace qvt;

namespace {

constexpr double kFixtureBudgetSeconds = 1.0;
constexpr double kCharOracleBudgetSeconds = 600.0;
constexpr double kRoundtripBudgetSeconds = 300.0;

struct Outcome {
  bool pass;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string budget_note(double elapsed, double budget) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2fs of %.0fs", elapsed, budget);
  return buf;
}

bool verdict_row(const Space& s, Verdict (*axiom)(const Space&, int,
                                                  const Limits&),
                 const std::vector<bool>& expected, std::string& note,
                 const char* label) {
  for (int p = 0; p < s.carrier.size(); ++p) {
    const bool got = axiom(s, p, Limits::defaults()).result;
    if (got != expected[static_cast<size_t>(p)]) {
      note = std::string(label) + " at " + s.carrier.name(p) + " is " +
             (got ? "true" : "false");
      return false;
    }
  }
  return true;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const Space s = test::example_space("t0-not-t1.qvt");
  std::string note;
  if (!verdict_row(s, t0_at, {true, false, false}, note, "t0")) {
    return {false, note};
  }
  if (!verdict_row(s, t1_at, {false, false, false}, note, "t1")) {
    return {false, note};
  }
  if (!verdict_row(s, closed_at, {true, false, false}, note, "closed")) {
    return {false, note};
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kFixtureBudgetSeconds) {
    return {false, "budget exceeded: " +
                       budget_note(elapsed, kFixtureBudgetSeconds)};
  }
  return {true, "t0 {a}, t1 {}, closed {a} in " +
                    budget_note(elapsed, kFixtureBudgetSeconds)};
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const Space s = test::example_space("d-connected.qvt");
  if (!d_connected(s).result) return {false, "dconn is false"};
  std::string note;
  if (!verdict_row(s, t0_at, {false, false, false}, note, "t0")) {
    return {false, note};
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kFixtureBudgetSeconds) {
    return {false, "budget exceeded: " +
                       budget_note(elapsed, kFixtureBudgetSeconds)};
  }
  return {true,
          "dconn true, t0 {} in " + budget_note(elapsed, kFixtureBudgetSeconds)};
}

std::string sweep_note(const SweepResult& r) {
  return std::to_string(r.violations) + " violations, " +
         std::to_string(r.divergences) + " divergences, " +
         std::to_string(r.checks) + " checks";
}

Outcome run_sweep_criterion(SweepConfig config, double budget) {
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = run_suite(config);
  const double elapsed = seconds_since(start);
  if (r.budget_exhausted) {
    return {false, "check budget exhausted: " + sweep_note(r)};
  }
  if (elapsed >= budget) {
    return {false, "time budget exceeded: " + budget_note(elapsed, budget)};
  }
  if (r.violations != 0) {
    std::string sample;
    for (const Finding& f : r.findings) {
      if (f.classification == "violation") {
        sample = "; first: " + f.suite + " expected " + f.expected +
                 ", actual " + f.actual;
        break;
      }
    }
    return {false, sweep_note(r) + sample};
  }
  return {true, sweep_note(r) + " in " + budget_note(elapsed, budget)};
}

SweepConfig instance_set() {
  SweepConfig config;
  config.max_lattice_size = 3;
  config.max_carrier_size = 3;
  config.gauge_enum_carrier_max = 2;
  config.families = {"chains", "diamond"};
  return config;
}

Outcome criterion3() {
  SweepConfig config = instance_set();
  config.suites = {"char_oracle"};
  return run_sweep_criterion(config, kCharOracleBudgetSeconds);
}

Outcome criterion4() {
  SweepConfig config = instance_set();
  config.suites = {"implications"};
  return run_sweep_criterion(config, kCharOracleBudgetSeconds);
}

Outcome criterion5() {
  SweepConfig config;  // default families, every instance
  config.suites = {"presentation"};
  return run_sweep_criterion(config, kCharOracleBudgetSeconds);
}

Outcome criterion6() {
  SweepConfig config;
  config.families = {"chains"};
  config.max_lattice_size = 3;
  config.max_carrier_size = 2;
  config.suites = {"roundtrip"};
  return run_sweep_criterion(config, kRoundtripBudgetSeconds);
}

Outcome criterion7() {
  for (const char* name : {"t0-not-t1.qvt", "d-connected.qvt"}) {
    try {
      const Space s = test::example_space(name);
      validate_distance(s.quantale, s.distance());
    } catch (const std::exception& e) {
      return {false, std::string(name) + " rejected: " + e.what()};
    }
  }
  try {
    Lattice m3 = test::m3_lattice();
    std::vector<Elem> star = meet_star_table(m3);
    validate_quantale(std::move(m3), std::move(star));
    return {false, "M3 with meet was accepted"};
  } catch (const error& e) {
    if (e.code() != errc::not_join_distributive) {
      return {false, std::string("M3 rejected with ") + errc_name(e.code())};
    }
    if (e.subjects().empty()) {
      return {false, "M3 rejection carries no witness"};
    }
    std::string witness;
    for (const std::string& s : e.subjects()) {
      if (!witness.empty()) witness += " ";
      witness += s;
    }
    return {true, "fixtures validate; M3 rejected with witness " + witness};
  }
}

Outcome criterion8() {
  const SweepConfig config;
  const SweepResult a = run_suite(config);
  const SweepResult b = run_suite(config);
  const std::string ja = findings_to_json(config, a);
  const std::string jb = findings_to_json(config, b);
  if (ja != jb) return {false, "findings outputs differ between runs"};
  return {true, std::to_string(ja.size()) + " identical bytes, " +
                    std::to_string(a.findings.size()) + " findings"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"t0-not-t1 fixture verdicts", criterion1},
      {"d-connected fixture verdicts", criterion2},
      {"characterization vs oracle agreement", criterion3},
      {"theorem implications", criterion4},
      {"presentation equivalence", criterion5},
      {"transition round trips", criterion6},
      {"fixture validation and M3 rejection", criterion7},
      {"sweep determinism", criterion8},
  };
  int failures = 0;
  for (size_t i = 0; i < sizeof(criteria) / sizeof(criteria[0]); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].label, o.note.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of 8 criteria failing\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passing\n");
  return 0;
}
