#pragma once

#include <vector>

#include "qvt/lattice.hpp"

namespace qvt {

/// A finite quantale: complete lattice plus an associative tensor that
/// distributes over arbitrary joins on both sides.  The empty-join case
/// forces bottom * x = x * bottom = bottom.
class Quantale {
 public:
  const Lattice& lattice() const { return lat_; }
  int size() const { return lat_.size(); }

  Elem star(Elem a, Elem b) const { return star_[a * lat_.size() + b]; }

  bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
  Elem bottom() const { return lat_.bottom(); }
  Elem top() const { return lat_.top(); }
  Elem join_all(LSubset s) const { return lat_.join_all(s); }
  Elem meet_all(LSubset s) const { return lat_.meet_all(s); }
  const std::string& name(Elem a) const { return lat_.name(a); }
  Elem index_of(const std::string& name) const { return lat_.index_of(name); }

  bool commutative() const { return commutative_; }
  bool integral() const { return integral_; }
  bool completely_distributive() const { return cdistributive_; }

  bool well_below(Elem a, Elem b) const { return wb_[a * lat_.size() + b] != 0; }
  bool well_above(Elem a, Elem b) const { return wa_[a * lat_.size() + b] != 0; }

  /// Elements well below top, the test set quantified over in local support.
  const std::vector<Elem>& wb_top() const { return wb_top_; }
  /// Elements well above bottom, the other support test set.
  const std::vector<Elem>& wa_bot() const { return wa_bot_; }

  friend Quantale validate_quantale(Lattice lat, std::vector<Elem> star,
                                    const Limits& limits);

 private:
  Lattice lat_;
  std::vector<Elem> star_;
  std::vector<char> wb_, wa_;
  std::vector<Elem> wb_top_, wa_bot_;
  bool commutative_ = false, integral_ = false, cdistributive_ = false;
};

/// Checks associativity and two-sided distributivity of the tensor over all
/// subset joins (including the empty join), then precomputes the well-below
/// and well-above tables and the structure flags.  The star table is indexed
/// star[a*n+b] = a * b.  Throws qvt::error with witnesses on failure.
Quantale validate_quantale(Lattice lat, std::vector<Elem> star,
                           const Limits& limits = Limits::defaults());

/// The meet tensor on a given lattice, star[a*n+b] = meet(a, b).  Always a
/// valid quantale tensor on a completely distributive lattice; on others
/// validate_quantale rejects it with a join-distributivity witness.
std::vector<Elem> meet_star_table(const Lattice& lat);

/// Meet of all u with v * alpha <= u v omega over both support test sets:
/// the infimum of the values that local support cannot tell apart from v.
Elem support_floor(const Quantale& q, Elem v);

}  // namespace qvt
