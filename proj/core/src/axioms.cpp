#include "qvt/axioms.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "qvt/transitions.hpp"

namespace qvt {
namespace {

struct PairCondition {
  bool holds;
  std::string note;
};

// The infimum of the gauge over each cell: attained at the least member.
LMetric gauge_floor(const Quantale& q, const GaugeBase& base,
                    const Limits& limits) {
  return least_gauge_member(q, base, limits);
}

Verdict decide_pairs(Axiom axiom, Method method, int point, int n,
                     const std::function<PairCondition(int)>& condition) {
  Verdict v{axiom, method, point, true, {}};
  for (int x = 0; x < n; ++x) {
    if (x == point) continue;
    PairCondition c = condition(x);
    v.witnesses.push_back(Witness{x, point, c.note});
    if (!c.holds) {
      v.result = false;
      v.witnesses = {Witness{x, point, c.note}};
      return v;
    }
  }
  return v;
}

PairCondition gauge_separation(const Quantale& q, const Space& space, int p,
                               int x, bool conjunctive, const Limits& limits) {
  const GaugeBase& base = space.gauge();
  // Base members are gauge members; scan them for a witness first.
  for (std::size_t k = 0; k < base.metrics.size(); ++k) {
    const LMetric& d = base.metrics[k];
    const bool xp = d.at(x, p) == q.bottom();
    const bool px = d.at(p, x) == q.bottom();
    if (conjunctive ? (xp && px) : (xp || px)) {
      return {true, base.names[k] + "(" + base.carrier.name(x) + "," +
                        base.carrier.name(p) + ")" +
                        (xp ? "=" : "!=") + q.name(q.bottom())};
    }
  }
  // The gauge is the up-set of its least member, so a separating member
  // exists iff the least member separates.
  const LMetric least = gauge_floor(q, base, limits);
  const bool xp = least.at(x, p) == q.bottom();
  const bool px = least.at(p, x) == q.bottom();
  const bool holds = conjunctive ? (xp && px) : (xp || px);
  std::string note = "least member: d(" + base.carrier.name(x) + "," +
                     base.carrier.name(p) + ")=" + q.name(least.at(x, p)) +
                     ", d(" + base.carrier.name(p) + "," +
                     base.carrier.name(x) + ")=" + q.name(least.at(p, x));
  return {holds, note};
}

PairCondition distance_separation(const Quantale& q, const Space& space, int p,
                                  int x, bool conjunctive) {
  const ApproachDistance& dist = space.distance();
  const Elem xp = dist.at(x, PSubset{1} << p);
  const Elem px = dist.at(p, PSubset{1} << x);
  const bool bxp = xp == q.bottom();
  const bool bpx = px == q.bottom();
  std::string note = "delta(" + dist.carrier.name(x) + ",{" +
                     dist.carrier.name(p) + "})=" + q.name(xp) + ", delta(" +
                     dist.carrier.name(p) + ",{" + dist.carrier.name(x) +
                     "})=" + q.name(px);
  return {conjunctive ? (bxp && bpx) : (bxp || bpx), note};
}

PairCondition system_separation(const Quantale& q, const Space& space, int p,
                                int x, bool conjunctive) {
  const SystemBase& base = space.system();
  // phi with phi(x) = bottom exists in A(p) iff bottom is within support
  // blur of the least member's value there.
  const bool xp = effectively_bottom(q, least_member(q, base, p)[x]);
  const bool px = effectively_bottom(q, least_member(q, base, x)[p]);
  std::string note = "psi_" + base.carrier.name(p) + "(" +
                     base.carrier.name(x) + ")=" +
                     q.name(least_member(q, base, p)[x]) + ", psi_" +
                     base.carrier.name(x) + "(" + base.carrier.name(p) +
                     ")=" + q.name(least_member(q, base, x)[p]);
  return {conjunctive ? (xp && px) : (xp || px), note};
}

Verdict separation_axiom(Axiom axiom, const Space& space, int p,
                         bool conjunctive, const Limits& limits) {
  const Quantale& q = space.quantale;
  if (p < 0 || p >= space.carrier.size()) {
    throw error(errc::basepoint_missing, "point is not in the carrier",
                {std::to_string(p)});
  }
  auto condition = [&](int x) -> PairCondition {
    switch (space.presentation()) {
      case Presentation::gauge:
        return gauge_separation(q, space, p, x, conjunctive, limits);
      case Presentation::distance:
        return distance_separation(q, space, p, x, conjunctive);
      case Presentation::system:
        return system_separation(q, space, p, x, conjunctive);
    }
    throw error(errc::transition_invalid, "unreachable", {});
  };
  return decide_pairs(axiom, Method::characterization, p,
                      space.carrier.size(), condition);
}

Space to_gauge(const Space& space, const Limits& limits) {
  return transition(space, Presentation::gauge, Mode::oracle, limits);
}

Verdict initial_lift_discrete(Axiom axiom, const Space& space, int p,
                              bool skewed, int copies, const Limits& limits) {
  const Quantale& q = space.quantale;
  if (p < 0 || p >= space.carrier.size()) {
    throw error(errc::basepoint_missing, "point is not in the carrier",
                {std::to_string(p)});
  }
  const Space gauge_space = to_gauge(space, limits);
  const GaugeBase& gx = gauge_space.gauge();
  const Wedge w = wedge_carrier(space.carrier, p, copies, limits);

  std::vector<GaugeSource> sources;
  if (copies == 2) {
    const PointMap axis = skewed ? skewed_axis_map(w) : principal_axis_map(w);
    sources.push_back(GaugeSource{axis, product_gauge_base(q, {gx, gx}, limits)});
    sources.push_back(
        GaugeSource{folding_map(w), discrete_gauge_base(q, space.carrier)});
  } else {
    const std::vector<GaugeBase> factors(static_cast<std::size_t>(copies), gx);
    sources.push_back(
        GaugeSource{infinite_axis_map(w), product_gauge_base(q, factors, limits)});
    sources.push_back(GaugeSource{infinite_folding_map(w),
                                  discrete_gauge_base(q, space.carrier)});
  }
  const GaugeBase initial = initial_gauge_base(w.carrier, sources, q, limits);
  const bool discrete = is_discrete_gauge(q, initial);
  Verdict v{axiom, Method::oracle, p, discrete, {}};
  v.witnesses.push_back(Witness{
      p, p,
      discrete ? "initial lift on the wedge is discrete"
               : "discrete metric not supported by the initial base"});
  return v;
}

}  // namespace

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::t0: return "t0";
    case Axiom::t1: return "t1";
    case Axiom::closed: return "closed";
    case Axiom::dconn: return "dconn";
  }
  return "?";
}

const char* method_name(Method m) {
  return m == Method::characterization ? "char" : "oracle";
}

Verdict t0_at(const Space& space, int p, const Limits& limits) {
  return separation_axiom(Axiom::t0, space, p, false, limits);
}

Verdict t1_at(const Space& space, int p, const Limits& limits) {
  return separation_axiom(Axiom::t1, space, p, true, limits);
}

Verdict closed_at(const Space& space, int p, const Limits& limits) {
  return separation_axiom(Axiom::closed, space, p, false, limits);
}

Verdict d_connected(const Space& space, const Limits& limits) {
  const Quantale& q = space.quantale;
  const int n = space.carrier.size();
  Verdict v{Axiom::dconn, Method::characterization, -1, true, {}};

  auto fail = [&](int x, int y, const std::string& note) {
    v.result = false;
    v.witnesses = {Witness{x, y, note}};
  };

  switch (space.presentation()) {
    case Presentation::distance: {
      const ApproachDistance& dist = space.distance();
      for (int x = 0; x < n && v.result; ++x) {
        for (int y = 0; y < n && v.result; ++y) {
          if (x == y) continue;
          const Elem xy = dist.at(x, PSubset{1} << y);
          if (xy != q.top()) {
            fail(x, y,
                 "delta(" + dist.carrier.name(x) + ",{" +
                     dist.carrier.name(y) + "})=" + q.name(xy));
          }
        }
      }
      break;
    }
    case Presentation::gauge: {
      const GaugeBase& base = space.gauge();
      const LMetric bound = base_meet(q, base);
      bool need_least = false;
      for (int x = 0; x < n && v.result; ++x) {
        for (int y = 0; y < n && v.result; ++y) {
          if (x == y) continue;
          if (bound.at(x, y) != q.top()) {
            fail(x, y,
                 "base meet d(" + base.carrier.name(x) + "," +
                     base.carrier.name(y) + ")=" + q.name(bound.at(x, y)));
          } else {
            need_least = true;
          }
        }
      }
      if (v.result && need_least) {
        const LMetric least = gauge_floor(q, base, limits);
        for (int x = 0; x < n && v.result; ++x) {
          for (int y = 0; y < n && v.result; ++y) {
            if (x == y) continue;
            if (least.at(x, y) != q.top()) {
              fail(x, y,
                   "least member d(" + base.carrier.name(x) + "," +
                       base.carrier.name(y) + ")=" + q.name(least.at(x, y)));
            }
          }
        }
      }
      break;
    }
    case Presentation::system: {
      const SystemBase& base = space.system();
      for (int x = 0; x < n && v.result; ++x) {
        for (int y = 0; y < n && v.result; ++y) {
          if (x == y) continue;
          const Elem floor = support_floor(q, least_member(q, base, x)[y]);
          if (floor != q.top()) {
            fail(x, y,
                 "inf over A(" + base.carrier.name(x) + ") at " +
                     base.carrier.name(y) + " is " + q.name(floor));
          }
        }
      }
      break;
    }
  }
  if (v.result) {
    v.witnesses.push_back(
        Witness{-1, -1, "top both ways on every off-diagonal pair"});
  }
  return v;
}

Verdict t0_oracle(const Space& space, int p, const Limits& limits) {
  return initial_lift_discrete(Axiom::t0, space, p, false, 2, limits);
}

Verdict t1_oracle(const Space& space, int p, const Limits& limits) {
  return initial_lift_discrete(Axiom::t1, space, p, true, 2, limits);
}

Verdict closed_oracle(const Space& space, int p, int copies,
                      const Limits& limits) {
  if (copies < 2) {
    throw error(errc::arity_mismatch, "closedness oracle needs copies >= 2",
                {std::to_string(copies)});
  }
  return initial_lift_discrete(Axiom::closed, space, p, false, copies, limits);
}

bool is_contraction(const Quantale& q, const PointMap& f, const GaugeBase& from,
                    const GaugeBase& to, const Limits& limits) {
  for (const LMetric& d : to.metrics) {
    if (!gauge_contains(q, from, pullback_metric(q, f, d))) return false;
  }
  // When the codomain gauge is small enough, check the saturation too.
  try {
    for (const LMetric& d : enumerate_gauge(q, to, limits)) {
      if (!gauge_contains(q, from, pullback_metric(q, f, d))) return false;
    }
  } catch (const error& e) {
    if (!e.is_size_guard()) throw;
  }
  return true;
}

Verdict d_connected_oracle(const Space& space, const Limits& limits) {
  const Quantale& q = space.quantale;
  const int n = space.carrier.size();
  const Space gauge_space = to_gauge(space, limits);
  const GaugeBase& gx = gauge_space.gauge();
  const Carrier two = validate_carrier({"c0", "c1"});
  const GaugeBase dis2 = discrete_gauge_base(q, two);

  Verdict v{Axiom::dconn, Method::oracle, -1, true, {}};
  if (n > 31) {
    throw error(errc::size_guard, "too many points for the map sweep",
                {std::to_string(n)});
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (mask & 1) continue;  // fix f(point 0) = c0; complements coincide
    PointMap f{space.carrier, two, {}};
    f.map.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      f.map[static_cast<std::size_t>(x)] = (mask >> x) & 1;
    }
    if (is_contraction(q, f, gx, dis2, limits)) {
      v.result = false;
      v.witnesses = {Witness{-1, -1,
                             "non-constant contraction to the discrete pair, "
                             "mask " +
                                 std::to_string(mask)}};
      return v;
    }
  }
  v.witnesses.push_back(
      Witness{-1, -1, "every map to the discrete pair is constant"});
  return v;
}

Report full_report(const Space& space, Method method, int copies,
                   const Limits& limits) {
  Report r{{}, {}, {}, {}};
  const int n = space.carrier.size();
  for (int p = 0; p < n; ++p) {
    if (method == Method::characterization) {
      r.t0.push_back(t0_at(space, p, limits));
      r.t1.push_back(t1_at(space, p, limits));
      r.closed.push_back(closed_at(space, p, limits));
    } else {
      r.t0.push_back(t0_oracle(space, p, limits));
      r.t1.push_back(t1_oracle(space, p, limits));
      r.closed.push_back(closed_oracle(space, p, copies, limits));
    }
  }
  r.dconn = method == Method::characterization ? d_connected(space, limits)
                                               : d_connected_oracle(space, limits);
  return r;
}

bool dconn_gauge_exists_clause(const Quantale& q, const GaugeBase& base,
                               const Limits& limits) {
  const int n = base.carrier.size();
  const std::vector<LMetric> gauge = enumerate_gauge(q, base, limits);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (const LMetric& d : gauge) {
        if (d.at(x, y) == q.top() && d.at(y, x) == q.top()) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool dconn_system_exists_clause(const Quantale& q, const SystemBase& base) {
  const int n = base.carrier.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      FuncTable top_at_y(static_cast<std::size_t>(n), q.top());
      if (!system_contains(q, base, x, top_at_y)) return false;
    }
  }
  return true;
}

}  // namespace qvt
