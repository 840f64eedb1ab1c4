#include "qvt/errors.hpp"

#include "qvt/limits.hpp"

namespace qvt {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::unknown_element: return "UnknownElement";
    case errc::not_antisymmetric: return "NotAntisymmetric";
    case errc::missing_join: return "MissingJoin";
    case errc::missing_meet: return "MissingMeet";
    case errc::bound_mismatch: return "BoundMismatch";
    case errc::not_associative: return "NotAssociative";
    case errc::not_join_distributive: return "NotJoinDistributive";
    case errc::not_reflexive_top: return "NotReflexiveTop";
    case errc::triangle_violation: return "TriangleViolation";
    case errc::empty_base: return "EmptyBase";
    case errc::not_locally_directed: return "NotLocallyDirected";
    case errc::gauge_axioms: return "GaugeAxioms";
    case errc::axiom_point: return "AxiomPoint";
    case errc::axiom_empty: return "AxiomEmpty";
    case errc::axiom_union: return "AxiomUnion";
    case errc::axiom_tower: return "AxiomTower";
    case errc::not_filter_base: return "NotFilterBase";
    case errc::not_top_at_point: return "NotTopAtPoint";
    case errc::mixing_fails: return "MixingFails";
    case errc::basepoint_missing: return "BasepointMissing";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::transition_invalid: return "TransitionInvalid";
    case errc::size_guard: return "SizeGuard";
    case errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

const Limits& Limits::defaults() {
  static const Limits instance{};
  return instance;
}

}  // namespace qvt
