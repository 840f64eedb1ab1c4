#pragma once

#include "qvt/document.hpp"

namespace qvt {

struct SweepConfig {
  int max_lattice_size = 3;
  int max_carrier_size = 3;
  int gauge_enum_carrier_max = 2;   // carrier cap for gauge-enumeration suites
  std::vector<std::string> families = {"chains", "diamond", "fixtures"};
  std::vector<std::string> suites = {"validation", "char_oracle",
                                     "implications", "presentation",
                                     "roundtrip",   "divergences"};
  int max_gauge_bases_per_space = 64;
  int max_distances_per_space = 64;
  int max_systems_per_space = 64;
  std::int64_t max_checks = 2'000'000;
  std::string out = "findings.json";
};

SweepConfig parse_sweep_config(const std::string& json_text);

struct Finding {
  std::string suite;
  std::string instance;  // re-parseable document text
  std::string expected;
  std::string actual;
  std::string classification;  // violation | divergence | pass-summary
};

struct SweepResult {
  std::vector<Finding> findings;
  std::int64_t checks = 0;
  int violations = 0;
  int divergences = 0;
  bool budget_exhausted = false;
};

std::vector<Quantale> enumerate_quantales(const SweepConfig& config,
                                          const Limits& limits = Limits::defaults());

std::vector<LMetric> enumerate_metrics(const Quantale& q, const Carrier& c,
                                       const Limits& limits = Limits::defaults());
std::vector<GaugeBase> enumerate_gauge_bases(const Quantale& q, const Carrier& c,
                                             const SweepConfig& config,
                                             const Limits& limits = Limits::defaults());
std::vector<ApproachDistance> enumerate_distances(const Quantale& q,
                                                  const Carrier& c,
                                                  const SweepConfig& config,
                                                  const Limits& limits = Limits::defaults());
std::vector<SystemBase> enumerate_systems(const Quantale& q, const Carrier& c,
                                          const SweepConfig& config,
                                          const Limits& limits = Limits::defaults());

SweepResult run_suite(const SweepConfig& config,
                      const Limits& limits = Limits::defaults());

std::string findings_to_json(const SweepConfig& config,
                             const SweepResult& result);

}  // namespace qvt
