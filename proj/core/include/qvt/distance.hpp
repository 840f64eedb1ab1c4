#pragma once

#include <cstdint>
#include <vector>

#include "qvt/metric.hpp"

namespace qvt {

/// Subset of carrier points as a bitmask (carriers are guarded to at most
/// limits.distance_points_max points wherever full tables are built).
using PSubset = std::uint32_t;

/// An L-approach distance as a full table over X x P(X),
/// entry [x * 2^n + A] = delta(x, A).
struct ApproachDistance {
  Carrier carrier;
  std::vector<Elem> values;

  Elem at(int x, PSubset a) const {
    return values[(static_cast<std::size_t>(x) << carrier.size()) + a];
  }
  Elem& at(int x, PSubset a) {
    return values[(static_cast<std::size_t>(x) << carrier.size()) + a];
  }

  bool operator==(const ApproachDistance&) const = default;
};

/// { x : delta(x, A) >= alpha }
PSubset alpha_closure(const Quantale& q, const ApproachDistance& d, PSubset a,
                      Elem alpha);

/// The four distance axioms: delta(x,{x}) = top; delta(x,{}) = bottom;
/// delta(x, A u B) = delta(x,A) v delta(x,B); and the tower
/// delta(x,A) >= delta(x, closure(A, alpha)) * alpha for every alpha.
/// Throws with the witness (point, set, second set or alpha) on failure.
void validate_distance(const Quantale& q, const ApproachDistance& d,
                       const Limits& limits = Limits::defaults());

bool is_valid_distance(const Quantale& q, const ApproachDistance& d,
                       const Limits& limits = Limits::defaults());

/// Builds the full table from singleton values: diagonal top, empty set
/// bottom, larger sets completed by the union axiom.  rows[x*n+y] gives
/// delta(x,{y}).  The result still needs validate_distance (the tower
/// axiom does not come for free).
ApproachDistance distance_from_singletons(const Quantale& q, const Carrier& c,
                                          const std::vector<Elem>& rows,
                                          const Limits& limits = Limits::defaults());

/// delta(x,{y}) read back as an X x X table: the floor of the distance.
/// Always a valid L-metric (the tower axiom yields the triangle law).
LMetric distance_floor(const ApproachDistance& d);

std::string subset_points(const Carrier& c, PSubset a);

}  // namespace qvt
