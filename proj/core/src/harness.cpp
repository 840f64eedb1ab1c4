#include "qvt/harness.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qvt/axioms.hpp"
#include "qvt/transitions.hpp"

namespace qvt {
namespace {

const char* kKnownFamilies[] = {"chains", "diamond", "fixtures"};
const char* kKnownSuites[] = {"validation",   "char_oracle", "implications",
                              "presentation", "roundtrip",   "divergences"};

// Kept in sync with examples/t0-not-t1.qvt.
const char* kThreePointDoc = R"(quantale
  elements: 0 1/5 1/4 1/3 1/2 1
  bottom: 0   top: 1
  leq: 0<=1/5 1/5<=1/4 1/4<=1/3 1/3<=1/2 1/2<=1
  star: meet
space
  points: a b c
distance
  delta a {b} = 1/2
  delta a {c} = 1/4
  delta a {b,c} = 1/2
  delta b {a} = 0
  delta b {c} = 1/5
  delta b {a,c} = 1/5
  delta c {a} = 0
  delta c {b} = 1/3
  delta c {a,b} = 1/3
)";

// Kept in sync with examples/d-connected.qvt.
const char* kConnectedDoc = R"(quantale
  elements: -1 0 1 3
  bottom: -1   top: 3
  leq: -1<=0 0<=1 1<=3
  star: meet
space
  points: a b c
distance
  delta a {b} = 3
  delta a {c} = 3
  delta b {a} = 3
  delta b {c} = 3
  delta c {a} = 3
  delta c {b} = 3
)";

Lattice chain_lattice(int size, const std::vector<std::string>& names) {
  LatticeSpec spec;
  spec.elements = names;
  for (int i = 0; i + 1 < size; ++i) {
    spec.leq.emplace_back(names[i], names[i + 1]);
  }
  return validate_lattice(spec);
}

std::vector<std::string> generic_names(int size) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back("l" + std::to_string(i));
  return names;
}

std::vector<Elem> irreducibles(const Lattice& lat) {
  std::vector<Elem> out;
  const int n = lat.size();
  for (Elem a = 0; a < n; ++a) {
    LSubset below = 0;
    for (Elem b = 0; b < n; ++b) {
      if (b != a && lat.leq(b, a)) below |= LSubset{1} << b;
    }
    if (lat.join_all(below) != a) out.push_back(a);
  }
  return out;
}

// Every tensor distributing over joins is fixed by its values on pairs of
// join-irreducibles, so assignments there enumerate all candidates; the
// validator filters and table equality dedupes.
std::vector<std::vector<Elem>> all_tensors(const Lattice& lat,
                                           const Limits& limits) {
  const int n = lat.size();
  const std::vector<Elem> irr = irreducibles(lat);
  const int k = static_cast<int>(irr.size());
  std::int64_t candidates = 1;
  for (int i = 0; i < k * k; ++i) {
    candidates *= n;
    if (candidates > limits.metric_enum_max) {
      throw error(errc::size_guard, "too many tensor candidates",
                  {std::to_string(n), std::to_string(k)});
    }
  }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> pick(static_cast<std::size_t>(k) * k, 0);
  while (true) {
    std::vector<Elem> star(static_cast<std::size_t>(n) * n, lat.bottom());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem v = lat.bottom();
        for (int i = 0; i < k; ++i) {
          if (!lat.leq(irr[i], a)) continue;
          for (int j = 0; j < k; ++j) {
            if (!lat.leq(irr[j], b)) continue;
            v = lat.join(v, pick[i * k + j]);
          }
        }
        star[a * n + b] = v;
      }
    }
    try {
      validate_quantale(lat, star, limits);
      if (std::find(out.begin(), out.end(), star) == out.end()) {
        out.push_back(std::move(star));
      }
    } catch (const error& e) {
      if (e.is_size_guard()) throw;
    }
    int i = 0;
    for (; i < k * k; ++i) {
      if (++pick[i] < n) break;
      pick[i] = 0;
    }
    if (i == k * k) break;
  }
  return out;
}

Lattice diamond_lattice() {
  LatticeSpec spec;
  spec.elements = {"bot", "s", "t", "top"};
  spec.leq = {{"bot", "s"}, {"bot", "t"}, {"s", "top"}, {"t", "top"}};
  return validate_lattice(spec);
}

bool same_quantale(const Quantale& a, const Quantale& b) {
  if (a.size() != b.size()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.name(x) != b.name(x)) return false;
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(x, y)) return false;
      if (a.star(x, y) != b.star(x, y)) return false;
    }
  }
  return true;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  SweepConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw error(errc::unknown_element,
                std::string("sweep config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw error(errc::unknown_element, "sweep config must be a JSON object");
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const nlohmann::json& v = item.value();
    try {
      if (key == "max_lattice_size") cfg.max_lattice_size = v.get<int>();
      else if (key == "max_carrier_size") cfg.max_carrier_size = v.get<int>();
      else if (key == "gauge_enum_carrier_max")
        cfg.gauge_enum_carrier_max = v.get<int>();
      else if (key == "families")
        cfg.families = v.get<std::vector<std::string>>();
      else if (key == "suites") cfg.suites = v.get<std::vector<std::string>>();
      else if (key == "max_gauge_bases_per_space")
        cfg.max_gauge_bases_per_space = v.get<int>();
      else if (key == "max_distances_per_space")
        cfg.max_distances_per_space = v.get<int>();
      else if (key == "max_systems_per_space")
        cfg.max_systems_per_space = v.get<int>();
      else if (key == "max_checks") cfg.max_checks = v.get<std::int64_t>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else
        throw error(errc::unknown_element, "unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::unknown_element,
                  "bad value for config key '" + key + "': " + e.what());
    }
  }
  if (cfg.max_lattice_size < 1 || cfg.max_carrier_size < 1 ||
      cfg.gauge_enum_carrier_max < 1 || cfg.max_gauge_bases_per_space < 1 ||
      cfg.max_distances_per_space < 1 || cfg.max_systems_per_space < 1 ||
      cfg.max_checks < 1) {
    throw error(errc::unknown_element, "config caps must be positive");
  }
  if (cfg.families.empty()) {
    throw error(errc::unknown_element, "config families must be non-empty");
  }
  for (const std::string& f : cfg.families) {
    if (std::find(std::begin(kKnownFamilies), std::end(kKnownFamilies), f) ==
        std::end(kKnownFamilies)) {
      throw error(errc::unknown_element, "unknown family '" + f + "'");
    }
  }
  for (const std::string& s : cfg.suites) {
    if (std::find(std::begin(kKnownSuites), std::end(kKnownSuites), s) ==
        std::end(kKnownSuites)) {
      throw error(errc::unknown_element, "unknown suite '" + s + "'");
    }
  }
  return cfg;
}

std::vector<Quantale> enumerate_quantales(const SweepConfig& config,
                                          const Limits& limits) {
  std::vector<Quantale> out;
  auto add = [&](Quantale q) {
    for (const Quantale& seen : out) {
      if (same_quantale(seen, q)) return;
    }
    out.push_back(std::move(q));
  };
  auto has = [&](const char* f) {
    return std::find(config.families.begin(), config.families.end(), f) !=
           config.families.end();
  };

  if (has("chains")) {
    for (int s = 1; s <= config.max_lattice_size; ++s) {
      const Lattice lat = chain_lattice(s, generic_names(s));
      if (s <= 4) {
        for (const std::vector<Elem>& star : all_tensors(lat, limits)) {
          add(validate_quantale(lat, star, limits));
        }
      } else {
        add(validate_quantale(lat, meet_star_table(lat), limits));
      }
    }
  }
  if (has("diamond")) {
    const Lattice lat = diamond_lattice();
    for (const std::vector<Elem>& star : all_tensors(lat, limits)) {
      add(validate_quantale(lat, star, limits));
    }
  }
  if (has("fixtures")) {
    const Lattice boolean = chain_lattice(2, {"0", "1"});
    add(validate_quantale(boolean, meet_star_table(boolean), limits));
    const Lattice six =
        chain_lattice(6, {"0", "1/5", "1/4", "1/3", "1/2", "1"});
    add(validate_quantale(six, meet_star_table(six), limits));
    const Lattice four = chain_lattice(4, {"-1", "0", "1", "3"});
    add(validate_quantale(four, meet_star_table(four), limits));
  }
  return out;
}

std::vector<LMetric> enumerate_metrics(const Quantale& q, const Carrier& c,
                                       const Limits& limits) {
  return enumerate_lmetrics(q, c, limits);
}

std::vector<GaugeBase> enumerate_gauge_bases(const Quantale& q,
                                             const Carrier& c,
                                             const SweepConfig& config,
                                             const Limits& limits) {
  const std::vector<LMetric> metrics = enumerate_lmetrics(q, c, limits);
  const int m = static_cast<int>(metrics.size());
  std::vector<GaugeBase> out;
  if (m == 0) return out;
  if (m > 20) {
    throw error(errc::size_guard, "too many metrics for subset enumeration",
                {std::to_string(m)});
  }
  // meet indices make the closure test a bit lookup per pair
  std::vector<int> meet_of(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const LMetric meet = pointwise_meet(q, c, {&metrics[i], &metrics[j]});
      for (int p = 0; p < m; ++p) {
        if (metrics[p] == meet) {
          meet_of[i * m + j] = p;
          meet_of[j * m + i] = p;
          break;
        }
      }
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  // meet-closed subsets are locally directed, so no validation pass is
  // needed; base sizes stay small to keep the wedge oracles tractable
  const int kMaxBaseSize = 4;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::vector<int> picked;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) picked.push_back(i);
    }
    if (static_cast<int>(picked.size()) > kMaxBaseSize) continue;
    bool closed = true;
    for (std::size_t i = 0; i < picked.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < picked.size() && closed; ++j) {
        const int p = meet_of[picked[i] * m + picked[j]];
        closed = p >= 0 && ((mask >> p) & 1) != 0;
      }
    }
    if (!closed) continue;
    GaugeBase base{c, {}, {}};
    for (std::size_t i = 0; i < picked.size(); ++i) {
      base.names.push_back("g" + std::to_string(i));
      base.metrics.push_back(metrics[picked[i]]);
    }
    out.push_back(std::move(base));
    if (static_cast<int>(out.size()) >= config.max_gauge_bases_per_space) {
      break;
    }
  }
  return out;
}

std::vector<ApproachDistance> enumerate_distances(const Quantale& q,
                                                  const Carrier& c,
                                                  const SweepConfig& config,
                                                  const Limits& limits) {
  const int n = c.size();
  std::vector<ApproachDistance> out;
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Elem> pick(slots.size(), 0);
  while (true) {
    std::vector<Elem> rows(static_cast<std::size_t>(n) * n, q.top());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      rows[slots[i].first * n + slots[i].second] = pick[i];
    }
    ApproachDistance d = distance_from_singletons(q, c, rows, limits);
    if (is_valid_distance(q, d, limits)) {
      out.push_back(std::move(d));
      if (static_cast<int>(out.size()) >= config.max_distances_per_space) {
        break;
      }
    }
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++pick[i] < q.size()) break;
      pick[i] = 0;
    }
    if (i == slots.size()) break;
  }
  return out;
}

std::vector<SystemBase> enumerate_systems(const Quantale& q, const Carrier& c,
                                          const SweepConfig& config,
                                          const Limits& limits) {
  std::vector<SystemBase> out;
  auto add = [&](SystemBase base) {
    if (static_cast<int>(out.size()) >= config.max_systems_per_space) return;
    for (const SystemBase& seen : out) {
      if (seen.bases == base.bases) return;
    }
    out.push_back(std::move(base));
  };
  add(discrete_system_base(q, c));
  add(indiscrete_system_base(q, c));
  SweepConfig inner = config;
  inner.max_distances_per_space = config.max_systems_per_space;
  for (const ApproachDistance& d : enumerate_distances(q, c, inner, limits)) {
    add(distance_to_system(q, d));
    if (static_cast<int>(out.size()) >= config.max_systems_per_space) break;
  }
  return out;
}

namespace {

struct SuiteRunner {
  const SweepConfig& config;
  const Limits& limits;
  SweepResult result;
  std::vector<Quantale> quantales;
  bool stop = false;

  bool charge(std::int64_t n = 1) {
    result.checks += n;
    if (result.checks > config.max_checks) {
      result.budget_exhausted = true;
      stop = true;
    }
    return !stop;
  }

  void add(std::string suite, std::string instance, std::string expected,
           std::string actual, const char* classification) {
    if (classification == std::string("violation")) ++result.violations;
    if (classification == std::string("divergence")) ++result.divergences;
    result.findings.push_back(Finding{std::move(suite), std::move(instance),
                                      std::move(expected), std::move(actual),
                                      classification});
  }

  static Carrier make_carrier(int n) {
    std::vector<std::string> points;
    for (int i = 0; i < n; ++i) points.push_back("x" + std::to_string(i));
    return validate_carrier(std::move(points));
  }

  static std::string text_of(const Space& space) {
    return print_document(document_from_space(space));
  }

  template <typename Structure>
  Space make_space(const Quantale& q, const Carrier& c, Structure s) const {
    return Space{q, c, std::move(s)};
  }

  // guarded enumerations drop their family instead of aborting the sweep
  std::vector<GaugeBase> gauge_bases_for(const Quantale& q,
                                         const Carrier& c) const {
    try {
      return enumerate_gauge_bases(q, c, config, limits);
    } catch (const error& e) {
      if (!e.is_size_guard()) throw;
      return {};
    }
  }

  std::vector<SystemBase> systems_for(const Quantale& q,
                                      const Carrier& c) const {
    try {
      return enumerate_systems(q, c, config, limits);
    } catch (const error& e) {
      if (!e.is_size_guard()) throw;
      return {};
    }
  }

  std::vector<Space> spaces_for(const Quantale& q, int nx,
                                int structured_cap) const {
    const Carrier c = make_carrier(nx);
    std::vector<Space> out;
    std::vector<ApproachDistance> dists =
        enumerate_distances(q, c, config, limits);
    for (ApproachDistance& d : dists) out.push_back(Space{q, c, std::move(d)});
    if (nx <= structured_cap) {
      std::vector<GaugeBase> gauges = gauge_bases_for(q, c);
      for (GaugeBase& g : gauges) out.push_back(Space{q, c, std::move(g)});
      std::vector<SystemBase> systems = systems_for(q, c);
      for (SystemBase& s : systems) out.push_back(Space{q, c, std::move(s)});
    }
    return out;
  }

  bool in_char_scope(const Quantale& q) const {
    if (q.lattice().is_chain()) return q.size() <= 3;
    return q.size() == 4;
  }

  // ---- validation ----

  void expect_verdict(const std::string& text, const Verdict& v, bool want,
                      const std::string& label) {
    if (!charge()) return;
    if (v.result != want) {
      add("validation", text, label + " = " + (want ? "true" : "false"),
          label + " = " + (v.result ? "true" : "false"), "violation");
    }
  }

  void run_validation() {
    struct Expect {
      const char* text;
      std::vector<bool> t0;
      std::vector<bool> t1;
      std::vector<bool> closed;
      bool dconn;
    };
    const std::vector<Expect> fixtures = {
        {kThreePointDoc,
         {true, false, false},
         {false, false, false},
         {true, false, false},
         false},
        {kConnectedDoc,
         {false, false, false},
         {false, false, false},
         {false, false, false},
         true},
    };
    for (const Expect& e : fixtures) {
      if (stop) return;
      ParseResult parsed = parse_document(e.text);
      if (!charge()) return;
      if (!parsed.ok()) {
        add("validation", e.text, "fixture parses",
            "diagnostics: " +
                (parsed.diagnostics.empty() ? std::string("none")
                                            : parsed.diagnostics[0].message),
            "violation");
        continue;
      }
      if (!charge()) return;
      ParseResult reparsed = parse_document(print_document(*parsed.doc));
      if (!reparsed.ok() || !(*reparsed.doc == *parsed.doc)) {
        add("validation", e.text, "parse after print is the identity",
            "printed form differs", "violation");
      }
      Space space = load_space(*parsed.doc, limits);
      const Report report =
          full_report(space, Method::characterization, 3, limits);
      for (int p = 0; p < space.carrier.size(); ++p) {
        expect_verdict(e.text, report.t0[p], e.t0[p],
                       "t0 at " + space.carrier.name(p));
        expect_verdict(e.text, report.t1[p], e.t1[p],
                       "t1 at " + space.carrier.name(p));
        expect_verdict(e.text, report.closed[p], e.closed[p],
                       "closed at " + space.carrier.name(p));
      }
      expect_verdict(e.text, report.dconn, e.dconn, "dconn");
    }

    // corrupting the reflexive entry must be rejected, not skipped
    if (stop) return;
    ParseResult parsed = parse_document(kThreePointDoc);
    if (parsed.ok()) {
      StructureDoc doc = *parsed.doc;
      const int np = static_cast<int>(doc.points.size());
      doc.distance[(std::size_t{0} << np) + (PSubset{1} << 0)] = doc.bottom;
      std::string text = print_document(doc);
      if (!charge()) return;
      try {
        load_space(doc, limits);
        add("validation", text, "rejected: AxiomPoint", "accepted",
            "violation");
      } catch (const error& e) {
        add("validation", text, "rejected: AxiomPoint",
            std::string("rejected: ") + errc_name(e.code()), "pass-summary");
      }
    }
  }

  // ---- char_oracle ----

  void compare_methods(const Space& space) {
    const std::string text = text_of(space);
    try {
      for (int p = 0; p < space.carrier.size(); ++p) {
        if (!charge()) return;
        const Verdict ct0 = t0_at(space, p, limits);
        const Verdict ot0 = t0_oracle(space, p, limits);
        if (ct0.result != ot0.result) {
          add("char_oracle", text,
              "t0 at " + space.carrier.name(p) + ": char = " +
                  (ct0.result ? "true" : "false"),
              std::string("oracle = ") + (ot0.result ? "true" : "false"),
              "violation");
        }
        if (!charge()) return;
        const Verdict ct1 = t1_at(space, p, limits);
        const Verdict ot1 = t1_oracle(space, p, limits);
        if (ct1.result != ot1.result) {
          add("char_oracle", text,
              "t1 at " + space.carrier.name(p) + ": char = " +
                  (ct1.result ? "true" : "false"),
              std::string("oracle = ") + (ot1.result ? "true" : "false"),
              "violation");
        }
        if (!charge()) return;
        const Verdict cc = closed_at(space, p, limits);
        const Verdict oc = closed_oracle(space, p, 3, limits);
        if (cc.result != oc.result) {
          add("char_oracle", text,
              "closed at " + space.carrier.name(p) + ": char = " +
                  (cc.result ? "true" : "false"),
              std::string("oracle = ") + (oc.result ? "true" : "false"),
              "violation");
        }
      }
      if (!charge()) return;
      const Verdict cd = d_connected(space, limits);
      const Verdict od = d_connected_oracle(space, limits);
      if (cd.result != od.result) {
        add("char_oracle", text,
            std::string("dconn: char = ") + (cd.result ? "true" : "false"),
            std::string("oracle = ") + (od.result ? "true" : "false"),
            "violation");
      }
    } catch (const error& e) {
      add("char_oracle", text, "both methods complete",
          std::string(errc_name(e.code())) + ": " + e.what(), "divergence");
    }
  }

  void run_char_oracle() {
    for (const Quantale& q : quantales) {
      if (stop) return;
      if (!in_char_scope(q)) continue;
      const int max_n = std::min(3, config.max_carrier_size);
      for (int nx = 1; nx <= max_n; ++nx) {
        for (const Space& space :
             spaces_for(q, nx, config.gauge_enum_carrier_max)) {
          if (stop) return;
          compare_methods(space);
        }
      }
    }
  }

  // ---- implications ----

  void run_implications() {
    for (const Quantale& q : quantales) {
      if (stop) return;
      if (!in_char_scope(q)) continue;
      const bool degenerate = q.top() == q.bottom();
      const int max_n = std::min(3, config.max_carrier_size);
      for (int nx = 1; nx <= max_n; ++nx) {
        for (const Space& space :
             spaces_for(q, nx, config.gauge_enum_carrier_max)) {
          if (stop) return;
          const std::string text = text_of(space);
          if (degenerate) {
            if (!charge()) return;
            add("implications", text,
                "top and bottom distinct",
                "one-element quantale: every axiom holds, the "
                "connectedness implication is vacuously broken",
                "divergence");
            continue;
          }
          const Report r =
              full_report(space, Method::characterization, 3, limits);
          for (int p = 0; p < space.carrier.size(); ++p) {
            if (!charge()) return;
            if (r.t1[p].result && !r.t0[p].result) {
              add("implications", text,
                  "t1 implies t0 at " + space.carrier.name(p), "t1 without t0",
                  "violation");
            }
            if (!charge()) return;
            if (r.closed[p].result != r.t0[p].result) {
              add("implications", text,
                  "closed iff t0 at " + space.carrier.name(p),
                  std::string("closed = ") +
                      (r.closed[p].result ? "true" : "false") + ", t0 = " +
                      (r.t0[p].result ? "true" : "false"),
                  "violation");
            }
            if (!charge()) return;
            if (r.dconn.result && space.carrier.size() >= 2 &&
                r.t0[p].result) {
              add("implications", text,
                  "d-connected excludes t0 at " + space.carrier.name(p),
                  "both hold", "violation");
            }
          }
        }
      }
    }
  }

  // ---- presentation ----

  void run_presentation() {
    for (const Quantale& q : quantales) {
      if (stop) return;
      if (!in_char_scope(q)) continue;
      const int max_n = std::min(3, config.max_carrier_size);
      for (int nx = 1; nx <= max_n; ++nx) {
        for (const Space& space :
             spaces_for(q, nx, config.gauge_enum_carrier_max)) {
          if (stop) return;
          const std::string text = text_of(space);
          try {
            const Space as_gauge =
                transition(space, Presentation::gauge, Mode::oracle, limits);
            const Space as_distance = transition(space, Presentation::distance,
                                                 Mode::oracle, limits);
            const Space as_system =
                transition(space, Presentation::system, Mode::oracle, limits);
            const Space* views[3] = {&as_gauge, &as_distance, &as_system};
            for (int p = 0; p < space.carrier.size(); ++p) {
              if (!charge(3)) return;
              compare_views(text, views, p);
            }
            if (!charge()) return;
            const bool dg = d_connected(as_gauge, limits).result;
            const bool dd = d_connected(as_distance, limits).result;
            const bool ds = d_connected(as_system, limits).result;
            if (dg != dd || dd != ds) {
              add("presentation", text, "dconn agrees across presentations",
                  std::string("gauge = ") + (dg ? "true" : "false") +
                      ", distance = " + (dd ? "true" : "false") +
                      ", system = " + (ds ? "true" : "false"),
                  "violation");
            }
          } catch (const error& e) {
            add("presentation", text, "transitions complete",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
      }
    }
  }

  void compare_views(const std::string& text, const Space* views[3], int p) {
    const char* labels[3] = {"gauge", "distance", "system"};
    const struct {
      const char* name;
      Verdict (*eval)(const Space&, int, const Limits&);
    } axioms[3] = {
        {"t0", [](const Space& s, int pt, const Limits& l) {
           return t0_at(s, pt, l);
         }},
        {"t1", [](const Space& s, int pt, const Limits& l) {
           return t1_at(s, pt, l);
         }},
        {"closed", [](const Space& s, int pt, const Limits& l) {
           return closed_at(s, pt, l);
         }},
    };
    for (const auto& ax : axioms) {
      bool r[3];
      for (int i = 0; i < 3; ++i) r[i] = ax.eval(*views[i], p, limits).result;
      if (r[0] != r[1] || r[1] != r[2]) {
        std::string actual;
        for (int i = 0; i < 3; ++i) {
          if (i) actual += ", ";
          actual += std::string(labels[i]) + " = " + (r[i] ? "true" : "false");
        }
        add("presentation", text,
            std::string(ax.name) + " at " + views[0]->carrier.name(p) +
                " agrees across presentations",
            actual, "violation");
      }
    }
  }

  // ---- roundtrip ----

  void run_roundtrip() {
    for (const Quantale& q : quantales) {
      if (stop) return;
      if (q.size() > 3) continue;
      const int max_n = std::min(2, config.max_carrier_size);
      for (int nx = 1; nx <= max_n; ++nx) {
        const Carrier c = make_carrier(nx);
        for (const GaugeBase& base : gauge_bases_for(q, c)) {
          if (stop) return;
          const Space gs{q, c, base};
          const std::string text = text_of(gs);
          if (!charge()) return;
          try {
            const ApproachDistance d =
                gauge_to_distance(q, base, Mode::oracle, limits);
            const GaugeBase back = distance_to_gauge(q, d, limits);
            const std::vector<LMetric> before =
                enumerate_gauge(q, base, limits);
            const std::vector<LMetric> after =
                enumerate_gauge(q, back, limits);
            if (before != after) {
              add("roundtrip", text,
                  "gauge to distance and back preserves the gauge",
                  "enumerated gauges differ (" +
                      std::to_string(before.size()) + " vs " +
                      std::to_string(after.size()) + " members)",
                  "violation");
            }
          } catch (const error& e) {
            add("roundtrip", text, "round trip completes",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
        for (const ApproachDistance& dist :
             enumerate_distances(q, c, config, limits)) {
          if (stop) return;
          const Space ds{q, c, dist};
          const std::string text = text_of(ds);
          if (!charge()) return;
          try {
            const SystemBase sys = distance_to_system(q, dist);
            const ApproachDistance back =
                system_to_distance(q, sys, Mode::base, limits);
            if (!(back == dist)) {
              add("roundtrip", text,
                  "distance to system and back is the identity",
                  "tables differ", "violation");
            }
          } catch (const error& e) {
            add("roundtrip", text, "round trip completes",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
      }
    }
  }

  // ---- divergences ----

  bool dconn_three_point_probe(const Space& space) {
    // cross-check of the two-point oracle against a three-point codomain
    const Quantale& q = space.quantale;
    const Space as_gauge =
        transition(space, Presentation::gauge, Mode::oracle, limits);
    const Carrier three = make_carrier(3);
    const GaugeBase dis3 = discrete_gauge_base(q, three);
    const int n = space.carrier.size();
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    while (true) {
      bool constant = true;
      for (int x = 1; x < n; ++x) constant = constant && pick[x] == pick[0];
      if (!constant && pick[0] == 0) {
        PointMap f{space.carrier, three, pick};
        if (is_contraction(q, f, as_gauge.gauge(), dis3, limits)) return false;
      }
      int i = 0;
      for (; i < n; ++i) {
        if (++pick[i] < 3) break;
        pick[i] = 0;
      }
      if (i == n) break;
    }
    return true;
  }

  void run_divergences() {
    for (std::size_t qi = 0; qi < quantales.size(); ++qi) {
      const Quantale& q = quantales[qi];
      if (stop) return;
      bool seen_g2d = false, seen_s2d = false, seen_gexists = false,
           seen_sexists = false, seen_t0read = false, seen_copies = false,
           seen_threept = false;
      const int max_n = std::min(2, config.max_carrier_size);
      for (int nx = 1; nx <= max_n; ++nx) {
        const Carrier c = make_carrier(nx);
        for (const GaugeBase& base : gauge_bases_for(q, c)) {
          if (stop) return;
          const Space gs{q, c, base};
          if (!charge(3)) return;
          try {
            if (!seen_g2d) {
              const ApproachDistance lo =
                  gauge_to_distance(q, base, Mode::base, limits);
              const ApproachDistance hi =
                  gauge_to_distance(q, base, Mode::oracle, limits);
              if (!(lo == hi)) {
                seen_g2d = true;
                add("divergences", text_of(gs),
                    "base and oracle gauge-to-distance agree",
                    "base-member infimum differs from full-gauge infimum",
                    "divergence");
              }
            }
            if (!seen_gexists) {
              const bool lit = dconn_gauge_exists_clause(q, base, limits);
              const bool inf = d_connected(gs, limits).result;
              if (lit != inf) {
                seen_gexists = true;
                add("divergences", text_of(gs),
                    "literal exists-clause matches the infimum reading",
                    std::string("exists-clause = ") +
                        (lit ? "true" : "false") + ", infimum = " +
                        (inf ? "true" : "false"),
                    "divergence");
              }
            }
            if (!seen_t0read) {
              const LMetric least = least_gauge_member(q, base, limits);
              for (int x = 0; x < nx && !seen_t0read; ++x) {
                for (int p = 0; p < nx; ++p) {
                  if (x == p) continue;
                  const bool xp = least.at(x, p) == q.bottom();
                  const bool px = least.at(p, x) == q.bottom();
                  if ((xp || px) != (xp && px)) {
                    seen_t0read = true;
                    add("divergences", text_of(gs),
                        "one-sided and two-sided t0 readings agree",
                        "a single witness metric separates in one direction "
                        "only",
                        "divergence");
                    break;
                  }
                }
              }
            }
          } catch (const error& e) {
            add("divergences", text_of(gs), "probes complete",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
        for (const SystemBase& sys : systems_for(q, c)) {
          if (stop) return;
          const Space ss{q, c, sys};
          if (!charge(2)) return;
          try {
            if (!seen_s2d) {
              const ApproachDistance lo =
                  system_to_distance(q, sys, Mode::base, limits);
              const ApproachDistance hi =
                  system_to_distance(q, sys, Mode::oracle, limits);
              if (!(lo == hi)) {
                seen_s2d = true;
                add("divergences", text_of(ss),
                    "base and oracle system-to-distance agree",
                    "base infimum differs from saturated-system infimum",
                    "divergence");
              }
            }
            if (!seen_sexists) {
              const bool lit = dconn_system_exists_clause(q, sys);
              const bool inf = d_connected(ss, limits).result;
              if (lit != inf) {
                seen_sexists = true;
                add("divergences", text_of(ss),
                    "literal exists-clause matches the infimum reading",
                    std::string("exists-clause = ") +
                        (lit ? "true" : "false") + ", infimum = " +
                        (inf ? "true" : "false"),
                    "divergence");
              }
            }
          } catch (const error& e) {
            add("divergences", text_of(ss), "probes complete",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
        for (const ApproachDistance& dist :
             enumerate_distances(q, c, config, limits)) {
          if (stop) return;
          const Space ds{q, c, dist};
          if (!charge(2)) return;
          try {
            if (!seen_copies) {
              for (int p = 0; p < nx && !seen_copies; ++p) {
                const bool three = closed_oracle(ds, p, 3, limits).result;
                const bool four = closed_oracle(ds, p, 4, limits).result;
                if (three != four) {
                  seen_copies = true;
                  add("divergences", text_of(ds),
                      "closedness oracle agrees for 3 and 4 copies",
                      std::string("copies 3 = ") + (three ? "true" : "false") +
                          ", copies 4 = " + (four ? "true" : "false"),
                      "divergence");
                }
              }
            }
            if (!seen_threept) {
              const bool two = d_connected_oracle(ds, limits).result;
              const bool three = dconn_three_point_probe(ds);
              if (two != three) {
                seen_threept = true;
                add("divergences", text_of(ds),
                    "two-point and three-point codomain oracles agree",
                    std::string("two-point = ") + (two ? "true" : "false") +
                        ", three-point = " + (three ? "true" : "false"),
                    "divergence");
              }
            }
          } catch (const error& e) {
            add("divergences", text_of(ds), "probes complete",
                std::string(errc_name(e.code())) + ": " + e.what(),
                "divergence");
          }
        }
      }
    }
  }

  void summary(const std::string& suite, int v0, int d0, std::int64_t c0) {
    std::string actual = std::to_string(result.violations - v0) +
                         " violations, " +
                         std::to_string(result.divergences - d0) +
                         " divergences, " +
                         std::to_string(result.checks - c0) + " checks";
    if (result.budget_exhausted) actual += ", budget exhausted";
    result.findings.push_back(
        Finding{suite, "", "0 violations", std::move(actual), "pass-summary"});
  }
};

}  // namespace

SweepResult run_suite(const SweepConfig& config, const Limits& limits) {
  SuiteRunner runner{config, limits, {}, {}, false};
  runner.quantales = enumerate_quantales(config, limits);
  for (const std::string& suite : config.suites) {
    if (runner.stop) break;
    const int v0 = runner.result.violations;
    const int d0 = runner.result.divergences;
    const std::int64_t c0 = runner.result.checks;
    if (suite == "validation") runner.run_validation();
    else if (suite == "char_oracle") runner.run_char_oracle();
    else if (suite == "implications") runner.run_implications();
    else if (suite == "presentation") runner.run_presentation();
    else if (suite == "roundtrip") runner.run_roundtrip();
    else if (suite == "divergences") runner.run_divergences();
    runner.summary(suite, v0, d0, c0);
  }
  return std::move(runner.result);
}

std::string findings_to_json(const SweepConfig& config,
                             const SweepResult& result) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = {{"max_lattice_size", config.max_lattice_size},
                 {"max_carrier_size", config.max_carrier_size},
                 {"gauge_enum_carrier_max", config.gauge_enum_carrier_max},
                 {"families", config.families},
                 {"suites", config.suites},
                 {"max_gauge_bases_per_space", config.max_gauge_bases_per_space},
                 {"max_distances_per_space", config.max_distances_per_space},
                 {"max_systems_per_space", config.max_systems_per_space},
                 {"max_checks", config.max_checks}};
  j["summary"] = {{"checks", result.checks},
                  {"violations", result.violations},
                  {"divergences", result.divergences},
                  {"budget_exhausted", result.budget_exhausted}};
  j["findings"] = nlohmann::ordered_json::array();
  for (const Finding& f : result.findings) {
    j["findings"].push_back({{"suite", f.suite},
                             {"classification", f.classification},
                             {"expected", f.expected},
                             {"actual", f.actual},
                             {"instance", f.instance}});
  }
  return j.dump(2) + "\n";
}

}  // namespace qvt
