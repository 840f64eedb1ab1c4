#pragma once

#include <string>
#include <vector>

#include "qvt/quantale.hpp"
#include "qvt/metric.hpp"

namespace qvt {

/// A function X -> L as a value vector.
using FuncTable = std::vector<Elem>;

/// Per-point filter bases B(x) of functions X -> L.  The saturated system
/// A(x) is intensional through system_contains.
struct SystemBase {
  Carrier carrier;
  std::vector<std::vector<std::string>> names;  // names[x][k] labels bases[x][k]
  std::vector<std::vector<FuncTable>> bases;

  bool operator==(const SystemBase&) const = default;
};

/// Per point: non-empty filter base (every pair has a pointwise lower bound
/// in the set), phi(x) = top for every member, and the mixing axiom: for
/// all phi in B(x), alpha well below top, omega well above bottom there is
/// a selection (phi_z in B(z))_z with
/// phi_x(z) * phi_z(y) * alpha <= phi(y) v omega for all y, z.
/// The selection at x serves in both roles, so candidates for it are tried
/// first and the remaining points are picked independently.
SystemBase validate_system_base(const Quantale& q, SystemBase base);

/// phi is supported by B(x): for all alpha well below top, omega well above
/// bottom some psi in B(x) has psi * alpha <= phi v omega pointwise.
/// Equivalent to testing the least base member only, since the bases are
/// finite filter bases.
bool system_contains(const Quantale& q, const SystemBase& base, int x,
                     const FuncTable& phi);

/// The pointwise-least member of B(x); exists because B(x) is a finite
/// filter base.
const FuncTable& least_member(const Quantale& q, const SystemBase& base, int x);

/// All functions X -> L supported by B(x), enumerated under
/// limits.func_enum_max.
std::vector<FuncTable> enumerate_system_at(const Quantale& q,
                                           const SystemBase& base, int x,
                                           const Limits& limits = Limits::defaults());

/// B(x) = { top at x, bottom elsewhere }.
SystemBase discrete_system_base(const Quantale& q, const Carrier& c);

/// B(x) = { constant top }.
SystemBase indiscrete_system_base(const Quantale& q, const Carrier& c);

}  // namespace qvt
