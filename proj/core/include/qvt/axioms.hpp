#pragma once

#include "qvt/constructions.hpp"
#include "qvt/space.hpp"

namespace qvt {

enum class Axiom { t0, t1, closed, dconn };
enum class Method { characterization, oracle };

const char* axiom_name(Axiom a);
const char* method_name(Method m);

struct Witness {
  int x;
  int y;
  std::string note;
};

struct Verdict {
  Axiom axiom;
  Method method;
  int point;  // -1 for d_connected
  bool result;
  std::vector<Witness> witnesses;
};

// Characterization theorems, evaluated on the space's own presentation.
Verdict t0_at(const Space& space, int p,
              const Limits& limits = Limits::defaults());
Verdict t1_at(const Space& space, int p,
              const Limits& limits = Limits::defaults());
Verdict closed_at(const Space& space, int p,
                  const Limits& limits = Limits::defaults());
Verdict d_connected(const Space& space,
                    const Limits& limits = Limits::defaults());

// Definitional oracles via initial lifts on wedges (spaces in other
// presentations are converted to a gauge first, oracle grade).
Verdict t0_oracle(const Space& space, int p,
                  const Limits& limits = Limits::defaults());
Verdict t1_oracle(const Space& space, int p,
                  const Limits& limits = Limits::defaults());
Verdict closed_oracle(const Space& space, int p, int copies = 3,
                      const Limits& limits = Limits::defaults());
Verdict d_connected_oracle(const Space& space,
                           const Limits& limits = Limits::defaults());

bool is_contraction(const Quantale& q, const PointMap& f, const GaugeBase& from,
                    const GaugeBase& to, const Limits& limits = Limits::defaults());

struct Report {
  std::vector<Verdict> t0;
  std::vector<Verdict> t1;
  std::vector<Verdict> closed;
  Verdict dconn;
};

Report full_report(const Space& space, Method method = Method::characterization,
                   int copies = 3, const Limits& limits = Limits::defaults());

// Literal clause readings that are not forced to agree with the verdicts
// above; the harness compares them and records divergences.
// Existential over the saturated gauge: some member is top both ways.
bool dconn_gauge_exists_clause(const Quantale& q, const GaugeBase& base,
                               const Limits& limits = Limits::defaults());
// Existential over the saturated system: some member is top at the other
// point, read symmetrically.
bool dconn_system_exists_clause(const Quantale& q, const SystemBase& base);

}  // namespace qvt
