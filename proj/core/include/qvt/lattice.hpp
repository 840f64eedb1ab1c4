#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qvt/errors.hpp"
#include "qvt/limits.hpp"

namespace qvt {

/// Index of a lattice element.  All tables are indexed by these.
using Elem = int;

/// Subset of lattice elements as a bitmask (guarded to at most 16 elements
/// wherever a full subset sweep runs, so 32 bits are plenty).
using LSubset = std::uint32_t;

struct LatticeSpec {
  std::vector<std::string> elements;
  // Order pairs a <= b.  Any generating set works; the validator takes the
  // reflexive-transitive closure before checking lattice axioms.
  std::vector<std::pair<std::string, std::string>> leq;
};

/// A finite complete lattice with total join/meet tables.
class Lattice {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Elem a) const { return names_[a]; }
  Elem index_of(const std::string& name) const;

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem join_all(LSubset s) const;  // join of a subset, bottom for the empty set
  Elem meet_all(LSubset s) const;  // meet of a subset, top for the empty set

  bool is_chain() const;

  friend Lattice validate_lattice(const LatticeSpec& spec);

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Elem> join_, meet_;
  Elem bottom_ = 0, top_ = 0;
};

/// Checks the poset closure and totality of joins and meets.
/// Throws qvt::error with the offending pair as witness.
Lattice validate_lattice(const LatticeSpec& spec);

/// alpha is well below beta: every subset A with beta <= join(A) contains
/// some delta with alpha <= delta.  Checked against all 2^|L| subsets.
bool well_below(const Lattice& lat, Elem alpha, Elem beta,
                const Limits& limits = Limits::defaults());

/// alpha is well above beta in the sense used here: every subset A with
/// meet(A) <= alpha contains some delta with delta <= beta.  This is the
/// exact quantifier layout the rest of the library consumes; see the tests
/// for the resulting truth tables on chains.
bool well_above(const Lattice& lat, Elem alpha, Elem beta,
                const Limits& limits = Limits::defaults());

/// Full relation tables, entry [a*n+b] = relation(a, b).
std::vector<char> well_below_table(const Lattice& lat,
                                   const Limits& limits = Limits::defaults());
std::vector<char> well_above_table(const Lattice& lat,
                                   const Limits& limits = Limits::defaults());

/// alpha = join{beta : beta well below alpha} for every alpha.
bool is_completely_distributive(const Lattice& lat,
                                const Limits& limits = Limits::defaults());

/// "{a,b,c}" rendering of a subset, in element order.
std::string subset_names(const Lattice& lat, LSubset s);

}  // namespace qvt
