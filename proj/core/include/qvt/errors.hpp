#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qvt {

enum class errc {
  // lattice / quantale
  duplicate_element,
  unknown_element,
  not_antisymmetric,
  missing_join,
  missing_meet,
  bound_mismatch,
  not_associative,
  not_join_distributive,
  // metric
  not_reflexive_top,
  triangle_violation,
  // gauge base
  empty_base,
  not_locally_directed,
  gauge_axioms,
  // distance
  axiom_point,
  axiom_empty,
  axiom_union,
  axiom_tower,
  // approach system base
  not_filter_base,
  not_top_at_point,
  mixing_fails,
  // constructions
  basepoint_missing,
  arity_mismatch,
  // transitions
  transition_invalid,
  // guards
  size_guard,
  budget_exceeded,
};

const char* errc_name(errc c);

/// Thrown by validators and guarded operations.  `subjects` carries the
/// witness (element, point or set names) so tests and the CLI can show
/// exactly which instance violated which axiom.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message, std::vector<std::string> subjects = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        subjects_(std::move(subjects)) {}

  errc code() const { return code_; }
  const std::vector<std::string>& subjects() const { return subjects_; }
  bool is_size_guard() const { return code_ == errc::size_guard; }

 private:
  errc code_;
  std::vector<std::string> subjects_;
};

}  // namespace qvt
