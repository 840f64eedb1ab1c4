#include "qvt/transitions.hpp"

#include <algorithm>

namespace qvt {
namespace {

[[noreturn]] void rethrow_invalid(const char* what, const error& inner) {
  if (inner.is_size_guard()) throw inner;
  throw error(errc::transition_invalid,
              std::string(what) + " produced an invalid structure: " +
                  inner.what(),
              inner.subjects());
}

ApproachDistance distance_from_floor(const Quantale& q, const Carrier& c,
                                     const LMetric& floor,
                                     const Limits& limits, const char* what) {
  const int n = c.size();
  std::vector<Elem> rows(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) rows[x * n + y] = floor.at(x, y);
  }
  try {
    return distance_from_singletons(q, c, rows, limits);
  } catch (const error& e) {
    rethrow_invalid(what, e);
  }
}

std::vector<LMetric> minimal_members(const Quantale& q,
                                     std::vector<LMetric> members) {
  std::vector<LMetric> minimal;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool is_minimal = true;
    for (std::size_t j = 0; j < members.size() && is_minimal; ++j) {
      if (i != j && pointwise_leq(q, members[j], members[i]) &&
          !(members[j] == members[i])) {
        is_minimal = false;
      }
    }
    if (is_minimal &&
        std::find(minimal.begin(), minimal.end(), members[i]) == minimal.end()) {
      minimal.push_back(members[i]);
    }
  }
  return minimal;
}

}  // namespace

const char* mode_name(Mode mode) {
  return mode == Mode::base ? "base" : "oracle";
}

ApproachDistance gauge_to_distance(const Quantale& q, const GaugeBase& base,
                                   Mode mode, const Limits& limits) {
  const int n = base.carrier.size();
  const PSubset full = static_cast<PSubset>((std::uint64_t{1} << n) - 1);
  if (mode == Mode::oracle) {
    // The full gauge is the up-set of its least member, so the infimum over
    // it is attained there and the distance is generated by that floor.
    const LMetric least = least_gauge_member(q, base, limits);
    return distance_from_floor(q, base.carrier, least, limits,
                               "gauge_to_distance");
  }
  ApproachDistance dist{base.carrier,
                        std::vector<Elem>(static_cast<std::size_t>(n) << n,
                                          q.bottom())};
  for (int x = 0; x < n; ++x) {
    for (PSubset a = 0; a <= full; ++a) {
      Elem value = q.top();
      for (const LMetric& d : base.metrics) {
        Elem reach = q.bottom();
        for (int y = 0; y < n; ++y) {
          if (a & (PSubset{1} << y)) reach = q.join(reach, d.at(x, y));
        }
        value = q.meet(value, reach);
      }
      dist.values[(static_cast<std::size_t>(x) << n) + a] = value;
    }
  }
  try {
    validate_distance(q, dist, limits);
    return dist;
  } catch (const error& e) {
    rethrow_invalid("gauge_to_distance", e);
  }
}

SystemBase distance_to_system(const Quantale& q, const ApproachDistance& dist) {
  const int n = dist.carrier.size();
  SystemBase base{dist.carrier, {}, {}};
  base.names.resize(n);
  base.bases.resize(n);
  for (int x = 0; x < n; ++x) {
    FuncTable row(n);
    for (int y = 0; y < n; ++y) {
      row[y] = dist.at(x, PSubset{1} << y);
    }
    base.names[x] = {"row_" + dist.carrier.name(x)};
    base.bases[x] = {std::move(row)};
  }
  try {
    return validate_system_base(q, std::move(base));
  } catch (const error& e) {
    rethrow_invalid("distance_to_system", e);
  }
}

GaugeBase system_to_gauge(const Quantale& q, const SystemBase& base,
                          const Limits& limits) {
  std::vector<LMetric> admitted;
  const std::vector<LMetric> all = enumerate_lmetrics(q, base.carrier, limits);
  const int n = base.carrier.size();
  for (const LMetric& d : all) {
    bool fits = true;
    for (int x = 0; x < n && fits; ++x) {
      FuncTable row(d.v.begin() + static_cast<std::ptrdiff_t>(x) * n,
                    d.v.begin() + static_cast<std::ptrdiff_t>(x + 1) * n);
      if (!system_contains(q, base, x, row)) fits = false;
    }
    if (fits) admitted.push_back(d);
  }
  if (admitted.empty()) {
    throw error(errc::transition_invalid,
                "system_to_gauge admitted no metric", {});
  }
  GaugeBase out{base.carrier, {}, minimal_members(q, std::move(admitted))};
  for (std::size_t i = 0; i < out.metrics.size(); ++i) {
    out.names.push_back("g" + std::to_string(i));
  }
  try {
    return validate_gauge_base(q, std::move(out), limits);
  } catch (const error& e) {
    rethrow_invalid("system_to_gauge", e);
  }
}

GaugeBase distance_to_gauge(const Quantale& q, const ApproachDistance& dist,
                            const Limits& limits) {
  LMetric floor = distance_floor(dist);
  try {
    validate_lmetric(q, dist.carrier, floor);
    GaugeBase out{dist.carrier, {"floor"}, {std::move(floor)}};
    return validate_gauge_base(q, std::move(out), limits);
  } catch (const error& e) {
    rethrow_invalid("distance_to_gauge", e);
  }
}

ApproachDistance system_to_distance(const Quantale& q, const SystemBase& base,
                                    Mode mode, const Limits& limits) {
  const int n = base.carrier.size();
  if (mode == Mode::base) {
    // The infimum over a filter base is attained at its least member.
    LMetric floor{n, std::vector<Elem>(static_cast<std::size_t>(n) * n)};
    for (int x = 0; x < n; ++x) {
      const FuncTable& psi = least_member(q, base, x);
      for (int y = 0; y < n; ++y) floor.v[x * n + y] = psi[y];
    }
    return distance_from_floor(q, base.carrier, floor, limits,
                               "system_to_distance");
  }
  const PSubset full = static_cast<PSubset>((std::uint64_t{1} << n) - 1);
  ApproachDistance dist{base.carrier,
                        std::vector<Elem>(static_cast<std::size_t>(n) << n,
                                          q.bottom())};
  for (int x = 0; x < n; ++x) {
    const std::vector<FuncTable> members =
        enumerate_system_at(q, base, x, limits);
    for (PSubset a = 0; a <= full; ++a) {
      Elem value = q.top();
      for (const FuncTable& phi : members) {
        Elem reach = q.bottom();
        for (int y = 0; y < n; ++y) {
          if (a & (PSubset{1} << y)) reach = q.join(reach, phi[y]);
        }
        value = q.meet(value, reach);
      }
      dist.values[(static_cast<std::size_t>(x) << n) + a] = value;
    }
  }
  try {
    validate_distance(q, dist, limits);
    return dist;
  } catch (const error& e) {
    rethrow_invalid("system_to_distance", e);
  }
}

Space transition(const Space& space, Presentation target, Mode mode,
                 const Limits& limits) {
  if (space.presentation() == target) return space;
  Space out{space.quantale, space.carrier, {}};
  switch (space.presentation()) {
    case Presentation::gauge: {
      ApproachDistance dist =
          gauge_to_distance(space.quantale, space.gauge(), mode, limits);
      if (target == Presentation::distance) {
        out.structure = std::move(dist);
      } else {
        out.structure = distance_to_system(space.quantale, dist);
      }
      break;
    }
    case Presentation::distance: {
      if (target == Presentation::gauge) {
        out.structure =
            distance_to_gauge(space.quantale, space.distance(), limits);
      } else {
        out.structure = distance_to_system(space.quantale, space.distance());
      }
      break;
    }
    case Presentation::system: {
      if (target == Presentation::gauge) {
        out.structure = system_to_gauge(space.quantale, space.system(), limits);
      } else {
        out.structure =
            system_to_distance(space.quantale, space.system(), mode, limits);
      }
      break;
    }
  }
  return out;
}

}  // namespace qvt
