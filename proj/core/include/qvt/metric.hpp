#pragma once

#include <string>
#include <vector>

#include "qvt/quantale.hpp"

namespace qvt {

struct Carrier {
  std::vector<std::string> points;

  int size() const { return static_cast<int>(points.size()); }
  const std::string& name(int x) const { return points[x]; }
  int index_of(const std::string& name) const;

  bool operator==(const Carrier&) const = default;
};

/// Validates non-empty carrier with unique point ids.
Carrier validate_carrier(std::vector<std::string> points);

/// An L-metric as a row-major value table, entry [x*n+y] = d(x,y).
struct LMetric {
  int n = 0;
  std::vector<Elem> v;

  Elem at(int x, int y) const { return v[x * n + y]; }
  Elem& at(int x, int y) { return v[x * n + y]; }

  bool operator==(const LMetric&) const = default;
};

/// d(x,x) = top for all x; d(x,y) * d(y,z) <= d(x,z) for all triples,
/// degenerate ones included (they bound which values a metric may take on
/// non-integral quantales).  Throws with the witness point(s) on failure.
void validate_lmetric(const Quantale& q, const Carrier& c, const LMetric& d);

/// Same checks as validate_lmetric without throwing.
bool is_valid_lmetric(const Quantale& q, const Carrier& c, const LMetric& d);

/// top on the diagonal, bottom elsewhere: the pointwise-least L-metric.
LMetric discrete_lmetric(const Quantale& q, const Carrier& c);

LMetric constant_top_lmetric(const Quantale& q, const Carrier& c);

/// Pointwise meet; the all-top metric for an empty list.
LMetric pointwise_meet(const Quantale& q, const Carrier& c,
                       const std::vector<const LMetric*>& ds);

bool pointwise_leq(const Quantale& q, const LMetric& a, const LMetric& b);

/// All valid L-metrics on the carrier, enumerated in lexicographic order of
/// the off-diagonal entries.  Guarded by limits.metric_enum_max candidates.
std::vector<LMetric> enumerate_lmetrics(const Quantale& q, const Carrier& c,
                                        const Limits& limits = Limits::defaults());

}  // namespace qvt
