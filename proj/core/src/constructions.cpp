#include "qvt/constructions.hpp"

#include <algorithm>

namespace qvt {
namespace {

void guard_points(std::int64_t count, const Limits& limits) {
  if (count > limits.product_points_max) {
    throw error(errc::size_guard,
                "carrier of " + std::to_string(count) + " points exceeds " +
                    std::to_string(limits.product_points_max),
                {std::to_string(count)});
  }
}

}  // namespace

PointMap validate_point_map(PointMap f) {
  if (static_cast<int>(f.map.size()) != f.domain.size()) {
    throw error(errc::arity_mismatch,
                "point map must be total on its domain",
                {std::to_string(f.map.size()), std::to_string(f.domain.size())});
  }
  for (int v : f.map) {
    if (v < 0 || v >= f.codomain.size()) {
      throw error(errc::unknown_element,
                  "point map lands outside its codomain", {std::to_string(v)});
    }
  }
  return f;
}

Carrier product_carrier(const std::vector<Carrier>& xs, const Limits& limits) {
  if (xs.empty()) {
    throw error(errc::arity_mismatch, "product of no carriers", {});
  }
  std::int64_t count = 1;
  for (const Carrier& x : xs) {
    count *= x.size();
    guard_points(count, limits);
  }
  std::vector<std::string> names(static_cast<std::size_t>(count));
  std::vector<int> coords(xs.size(), 0);
  for (std::int64_t u = 0; u < count; ++u) {
    std::string name = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) name += ",";
      name += xs[i].name(coords[i]);
    }
    name += ")";
    names[static_cast<std::size_t>(u)] = std::move(name);
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (++coords[i] < xs[i].size()) break;
      coords[i] = 0;
    }
  }
  return validate_carrier(std::move(names));
}

int product_index(const std::vector<Carrier>& xs,
                  const std::vector<int>& coords) {
  int u = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    u = u * xs[i].size() + coords[i];
  }
  return u;
}

PointMap projection_map(const std::vector<Carrier>& xs, int i,
                        const Limits& limits) {
  Carrier prod = product_carrier(xs, limits);
  PointMap f{prod, xs[static_cast<std::size_t>(i)], {}};
  f.map.resize(static_cast<std::size_t>(prod.size()));
  int stride = 1;
  for (std::size_t j = xs.size(); j-- > static_cast<std::size_t>(i) + 1;) {
    stride *= xs[j].size();
  }
  for (int u = 0; u < prod.size(); ++u) {
    f.map[static_cast<std::size_t>(u)] =
        (u / stride) % xs[static_cast<std::size_t>(i)].size();
  }
  return f;
}

int Wedge::component(int u) const {
  if (u == basepoint) return 0;
  return (u - 1) / (source.size() - 1) + 1;
}

int Wedge::underlying(int u) const {
  if (u == basepoint) return source_basepoint;
  const int offset = (u - 1) % (source.size() - 1);
  return offset < source_basepoint ? offset : offset + 1;
}

int Wedge::point(int x, int i) const {
  if (x == source_basepoint) return basepoint;
  const int offset = x < source_basepoint ? x : x - 1;
  return 1 + (i - 1) * (source.size() - 1) + offset;
}

Wedge wedge_carrier(const Carrier& x, int p, int copies, const Limits& limits) {
  if (p < 0 || p >= x.size()) {
    throw error(errc::basepoint_missing,
                "wedge basepoint is not a carrier point", {std::to_string(p)});
  }
  if (copies < 2) {
    throw error(errc::arity_mismatch, "wedge needs at least two copies",
                {std::to_string(copies)});
  }
  const std::int64_t count =
      std::int64_t{copies} * (x.size() - 1) + 1;
  guard_points(count, limits);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  names.push_back(x.name(p));
  for (int i = 1; i <= copies; ++i) {
    for (int xx = 0; xx < x.size(); ++xx) {
      if (xx == p) continue;
      names.push_back(x.name(xx) + ":" + std::to_string(i));
    }
  }
  return Wedge{validate_carrier(std::move(names)), 0, copies, x, p};
}

PointMap principal_axis_map(const Wedge& w) {
  if (w.copies != 2) {
    throw error(errc::arity_mismatch, "principal axis map needs a 2-fold wedge",
                {std::to_string(w.copies)});
  }
  const std::vector<Carrier> square{w.source, w.source};
  PointMap f{w.carrier, product_carrier(square), {}};
  f.map.resize(static_cast<std::size_t>(w.carrier.size()));
  for (int u = 0; u < w.carrier.size(); ++u) {
    const int x = w.underlying(u);
    const int i = w.component(u);
    const int a = (i == 1) ? x : w.source_basepoint;
    const int b = (i == 1) ? w.source_basepoint : x;
    f.map[static_cast<std::size_t>(u)] = product_index(square, {a, b});
  }
  return f;
}

PointMap skewed_axis_map(const Wedge& w) {
  if (w.copies != 2) {
    throw error(errc::arity_mismatch, "skewed axis map needs a 2-fold wedge",
                {std::to_string(w.copies)});
  }
  const std::vector<Carrier> square{w.source, w.source};
  PointMap f{w.carrier, product_carrier(square), {}};
  f.map.resize(static_cast<std::size_t>(w.carrier.size()));
  for (int u = 0; u < w.carrier.size(); ++u) {
    const int x = w.underlying(u);
    const int i = w.component(u);
    const int a = (i == 1) ? x : w.source_basepoint;
    const int b = x;
    f.map[static_cast<std::size_t>(u)] = product_index(square, {a, b});
  }
  return f;
}

PointMap folding_map(const Wedge& w) {
  PointMap f{w.carrier, w.source, {}};
  f.map.resize(static_cast<std::size_t>(w.carrier.size()));
  for (int u = 0; u < w.carrier.size(); ++u) {
    f.map[static_cast<std::size_t>(u)] = w.underlying(u);
  }
  return f;
}

PointMap infinite_axis_map(const Wedge& w) {
  const std::vector<Carrier> factors(static_cast<std::size_t>(w.copies),
                                     w.source);
  PointMap f{w.carrier, product_carrier(factors), {}};
  f.map.resize(static_cast<std::size_t>(w.carrier.size()));
  std::vector<int> coords(static_cast<std::size_t>(w.copies));
  for (int u = 0; u < w.carrier.size(); ++u) {
    std::fill(coords.begin(), coords.end(), w.source_basepoint);
    if (u != w.basepoint) {
      coords[static_cast<std::size_t>(w.component(u) - 1)] = w.underlying(u);
    }
    f.map[static_cast<std::size_t>(u)] = product_index(factors, coords);
  }
  return f;
}

PointMap infinite_folding_map(const Wedge& w) { return folding_map(w); }

LMetric pullback_metric(const Quantale& q, const PointMap& f, const LMetric& d) {
  (void)q;
  const int n = f.domain.size();
  LMetric e{n, std::vector<Elem>(static_cast<std::size_t>(n) * n)};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      e.v[u * n + v] = d.at(f.at(u), f.at(v));
    }
  }
  return e;
}

GaugeBase initial_gauge_base(const Carrier& domain,
                             const std::vector<GaugeSource>& sources,
                             const Quantale& q, const Limits& limits) {
  for (const GaugeSource& s : sources) {
    if (!(s.map.domain == domain)) {
      throw error(errc::arity_mismatch,
                  "initial source does not start at the given carrier", {});
    }
  }
  std::int64_t selections = 1;
  for (const GaugeSource& s : sources) {
    selections *= static_cast<std::int64_t>(s.base.metrics.size()) + 1;
    if (selections > limits.initial_selection_max) {
      throw error(errc::size_guard,
                  "initial lift would scan " + std::to_string(selections) +
                      "+ selections",
                  {std::to_string(selections)});
    }
  }
  GaugeBase out{domain, {}, {}};
  std::vector<std::size_t> pick(sources.size(), 0);
  for (std::int64_t step = 0; step < selections; ++step) {
    std::vector<LMetric> parts;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (pick[i] == 0) continue;  // source skipped: i not in K
      parts.push_back(pullback_metric(q, sources[i].map,
                                      sources[i].base.metrics[pick[i] - 1]));
    }
    std::vector<const LMetric*> views;
    views.reserve(parts.size());
    for (const LMetric& m : parts) views.push_back(&m);
    LMetric member = pointwise_meet(q, domain, views);
    if (std::find(out.metrics.begin(), out.metrics.end(), member) ==
        out.metrics.end()) {
      if (static_cast<std::int64_t>(out.metrics.size()) >=
          limits.initial_base_max) {
        throw error(errc::size_guard,
                    "initial base exceeds " +
                        std::to_string(limits.initial_base_max) + " members",
                    {});
      }
      out.names.push_back("h" + std::to_string(out.metrics.size()));
      out.metrics.push_back(std::move(member));
    }
    for (std::size_t i = sources.size(); i-- > 0;) {
      if (++pick[i] <= sources[i].base.metrics.size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

SystemBase initial_system_base(const Carrier& domain,
                               const std::vector<SystemSource>& sources,
                               const Quantale& q, const Limits& limits) {
  for (const SystemSource& s : sources) {
    if (!(s.map.domain == domain)) {
      throw error(errc::arity_mismatch,
                  "initial source does not start at the given carrier", {});
    }
  }
  const int n = domain.size();
  SystemBase out{domain, {}, {}};
  out.names.resize(static_cast<std::size_t>(n));
  out.bases.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::int64_t selections = 1;
    for (const SystemSource& s : sources) {
      const std::size_t k =
          s.base.bases[static_cast<std::size_t>(s.map.at(x))].size();
      selections *= static_cast<std::int64_t>(k) + 1;
      if (selections > limits.initial_selection_max) {
        throw error(errc::size_guard,
                    "initial lift would scan " + std::to_string(selections) +
                        "+ selections",
                    {std::to_string(selections)});
      }
    }
    std::vector<std::size_t> pick(sources.size(), 0);
    for (std::int64_t step = 0; step < selections; ++step) {
      FuncTable member(static_cast<std::size_t>(n), q.top());
      for (std::size_t i = 0; i < sources.size(); ++i) {
        if (pick[i] == 0) continue;
        const SystemSource& s = sources[i];
        const FuncTable& phi =
            s.base.bases[static_cast<std::size_t>(s.map.at(x))][pick[i] - 1];
        for (int y = 0; y < n; ++y) {
          member[static_cast<std::size_t>(y)] =
              q.meet(member[static_cast<std::size_t>(y)],
                     phi[static_cast<std::size_t>(s.map.at(y))]);
        }
      }
      auto& bx = out.bases[static_cast<std::size_t>(x)];
      if (std::find(bx.begin(), bx.end(), member) == bx.end()) {
        if (static_cast<std::int64_t>(bx.size()) >= limits.initial_base_max) {
          throw error(errc::size_guard,
                      "initial base exceeds " +
                          std::to_string(limits.initial_base_max) + " members",
                      {});
        }
        out.names[static_cast<std::size_t>(x)].push_back(
            "phi" + std::to_string(bx.size()));
        bx.push_back(std::move(member));
      }
      for (std::size_t i = sources.size(); i-- > 0;) {
        if (++pick[i] <=
            sources[i].base.bases[static_cast<std::size_t>(sources[i].map.at(x))]
                .size()) {
          break;
        }
        pick[i] = 0;
      }
    }
  }
  return out;
}

GaugeBase product_gauge_base(const Quantale& q,
                             const std::vector<GaugeBase>& factors,
                             const Limits& limits) {
  std::vector<Carrier> carriers;
  carriers.reserve(factors.size());
  for (const GaugeBase& f : factors) carriers.push_back(f.carrier);
  const Carrier prod = product_carrier(carriers, limits);
  std::vector<GaugeSource> sources;
  sources.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    sources.push_back(GaugeSource{
        projection_map(carriers, static_cast<int>(i), limits), factors[i]});
  }
  return initial_gauge_base(prod, sources, q, limits);
}

GaugeBase discrete_gauge_base(const Quantale& q, const Carrier& c) {
  return GaugeBase{c, {"dis"}, {discrete_lmetric(q, c)}};
}

bool is_discrete_gauge(const Quantale& q, const GaugeBase& base) {
  return gauge_contains(q, base, discrete_lmetric(q, base.carrier));
}

}  // namespace qvt
