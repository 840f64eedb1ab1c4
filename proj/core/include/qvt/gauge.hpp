#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvt/metric.hpp"

namespace qvt {

/// A locally directed base H of L-metrics.  The gauge it generates is the
/// set of locally supported metrics; membership is intensional through
/// gauge_contains, full enumeration sits behind a size guard.
struct GaugeBase {
  Carrier carrier;
  std::vector<std::string> names;  // one label per base metric
  std::vector<LMetric> metrics;

  bool operator==(const GaugeBase&) const = default;
};

/// for all x, alpha well below top and omega well above bottom there is a
/// base metric e with e(x,y) * alpha <= d(x,y) v omega for every y.
bool locally_supported(const Quantale& q, const LMetric& d,
                       const std::vector<LMetric>& h);

/// Every subset of h has a locally supported pointwise meet (the empty
/// subset contributes the all-top metric).  Exhaustive over 2^|h| subsets,
/// guarded by limits.directed_subset_max.
bool is_locally_directed(const Quantale& q, const Carrier& c,
                         const std::vector<LMetric>& h,
                         const Limits& limits = Limits::defaults());

/// Checks every base metric, non-emptiness and local directedness.
GaugeBase validate_gauge_base(const Quantale& q, GaugeBase base,
                              const Limits& limits = Limits::defaults());

/// Membership of d in the generated gauge: valid L-metric and locally
/// supported by the base.
bool gauge_contains(const Quantale& q, const GaugeBase& base, const LMetric& d);

/// The full gauge as an explicit set: every valid L-metric the base
/// supports.  The result is the up-set of its pointwise-least member.
std::vector<LMetric> enumerate_gauge(const Quantale& q, const GaugeBase& base,
                                     const Limits& limits = Limits::defaults());

/// Pointwise meet of the base metrics; always a gauge member by local
/// directedness, but not necessarily the least one on non-integral
/// quantales.
LMetric base_meet(const Quantale& q, const GaugeBase& base);

/// The pointwise-least gauge member, computed from the full enumeration.
LMetric least_gauge_member(const Quantale& q, const GaugeBase& base,
                           const Limits& limits = Limits::defaults());

/// v * alpha <= omega for every alpha well below top and omega well above
/// bottom: the values the support quantifiers cannot tell apart from bottom.
bool effectively_bottom(const Quantale& q, Elem v);

}  // namespace qvt
