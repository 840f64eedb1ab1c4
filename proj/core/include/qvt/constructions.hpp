#pragma once

#include "qvt/gauge.hpp"
#include "qvt/system.hpp"

namespace qvt {

struct PointMap {
  Carrier domain;
  Carrier codomain;
  std::vector<int> map;

  int at(int x) const { return map[static_cast<std::size_t>(x)]; }
};

PointMap validate_point_map(PointMap f);

// Product of carriers, row-major with the last factor fastest; a 2-factor
// product names its points "(x,y)".
Carrier product_carrier(const std::vector<Carrier>& xs,
                        const Limits& limits = Limits::defaults());

int product_index(const std::vector<Carrier>& xs,
                  const std::vector<int>& coords);

PointMap projection_map(const std::vector<Carrier>& xs, int i,
                        const Limits& limits = Limits::defaults());

// Wedge of n copies of X glued at p. Point 0 is p; the copy i of x != p is
// named "x:i" and laid out copy by copy.
struct Wedge {
  Carrier carrier;
  int basepoint;
  int copies;
  Carrier source;
  int source_basepoint;

  // Component index i in 1..copies and underlying point for a wedge point.
  int component(int u) const;
  int underlying(int u) const;
  // Wedge point for (x, i); x == p collapses to the basepoint.
  int point(int x, int i) const;
};

Wedge wedge_carrier(const Carrier& x, int p, int copies,
                    const Limits& limits = Limits::defaults());

PointMap principal_axis_map(const Wedge& w);
PointMap skewed_axis_map(const Wedge& w);
PointMap folding_map(const Wedge& w);
// A_p^n into X^n: copy i of x goes to (p,..,p,x,p,..,p) with x at slot i.
PointMap infinite_axis_map(const Wedge& w);
// nabla_p^n lands in X carrying the discrete structure.
PointMap infinite_folding_map(const Wedge& w);

struct GaugeSource {
  PointMap map;
  GaugeBase base;
};

struct SystemSource {
  PointMap map;
  SystemBase base;
};

// Initial bases: all pointwise meets of pullbacks along finite subsets of the
// sources, including the empty subset (the constant-top member).
GaugeBase initial_gauge_base(const Carrier& domain,
                             const std::vector<GaugeSource>& sources,
                             const Quantale& q,
                             const Limits& limits = Limits::defaults());

SystemBase initial_system_base(const Carrier& domain,
                               const std::vector<SystemSource>& sources,
                               const Quantale& q,
                               const Limits& limits = Limits::defaults());

GaugeBase product_gauge_base(const Quantale& q,
                             const std::vector<GaugeBase>& factors,
                             const Limits& limits = Limits::defaults());

GaugeBase discrete_gauge_base(const Quantale& q, const Carrier& c);

// A base generates the discrete gauge iff the discrete metric is a member of
// the generated gauge.
bool is_discrete_gauge(const Quantale& q, const GaugeBase& base);

LMetric pullback_metric(const Quantale& q, const PointMap& f, const LMetric& d);

}  // namespace qvt
