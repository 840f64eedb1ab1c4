#include "qvt/lattice.hpp"

#include <bit>

namespace qvt {
namespace {

int lowest_bit(LSubset s) { return std::countr_zero(s); }

void guard_subset_sweep(int n, const Limits& limits) {
  if (n > limits.lattice_exhaustive_max) {
    throw error(errc::size_guard,
                "lattice too large for exhaustive subset sweep (limit " +
                    std::to_string(limits.lattice_exhaustive_max) + ")",
                {std::to_string(n)});
  }
}

// join_of[mask] = join of the elements in mask, built incrementally.
std::vector<Elem> joins_by_mask(const Lattice& lat) {
  const int n = lat.size();
  std::vector<Elem> join_of(std::size_t{1} << n);
  join_of[0] = lat.bottom();
  for (LSubset m = 1; m < (LSubset{1} << n); ++m) {
    join_of[m] = lat.join(join_of[m & (m - 1)], lowest_bit(m));
  }
  return join_of;
}

std::vector<Elem> meets_by_mask(const Lattice& lat) {
  const int n = lat.size();
  std::vector<Elem> meet_of(std::size_t{1} << n);
  meet_of[0] = lat.top();
  for (LSubset m = 1; m < (LSubset{1} << n); ++m) {
    meet_of[m] = lat.meet(meet_of[m & (m - 1)], lowest_bit(m));
  }
  return meet_of;
}

}  // namespace

Elem Lattice::index_of(const std::string& name) const {
  for (Elem a = 0; a < size(); ++a) {
    if (names_[a] == name) return a;
  }
  throw error(errc::unknown_element, "element not declared: " + name, {name});
}

Elem Lattice::join_all(LSubset s) const {
  Elem r = bottom_;
  while (s != 0) {
    r = join(r, lowest_bit(s));
    s &= s - 1;
  }
  return r;
}

Elem Lattice::meet_all(LSubset s) const {
  Elem r = top_;
  while (s != 0) {
    r = meet(r, lowest_bit(s));
    s &= s - 1;
  }
  return r;
}

bool Lattice::is_chain() const {
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

Lattice validate_lattice(const LatticeSpec& spec) {
  const int n = static_cast<int>(spec.elements.size());
  if (n == 0) {
    throw error(errc::missing_join,
                "a lattice needs at least one element to carry the empty join",
                {"{}"});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (spec.elements[i] == spec.elements[j]) {
        throw error(errc::duplicate_element,
                    "element declared twice: " + spec.elements[i],
                    {spec.elements[i]});
      }
    }
  }

  Lattice lat;
  lat.names_ = spec.elements;
  lat.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) lat.leq_[a * n + a] = 1;
  for (const auto& [lo, hi] : spec.leq) {
    lat.leq_[lat.index_of(lo) * n + lat.index_of(hi)] = 1;
  }
  for (Elem k = 0; k < n; ++k) {
    for (Elem a = 0; a < n; ++a) {
      if (!lat.leq(a, k)) continue;
      for (Elem b = 0; b < n; ++b) {
        if (lat.leq(k, b)) lat.leq_[a * n + b] = 1;
      }
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (lat.leq(a, b) && lat.leq(b, a)) {
        throw error(errc::not_antisymmetric,
                    "order relates " + lat.name(a) + " and " + lat.name(b) +
                        " both ways",
                    {lat.name(a), lat.name(b)});
      }
    }
  }

  lat.join_.assign(static_cast<std::size_t>(n) * n, -1);
  lat.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem lub = -1, glb = -1;
      for (Elem c = 0; c < n; ++c) {
        if (lat.leq(a, c) && lat.leq(b, c)) {
          bool least = true;
          for (Elem d = 0; d < n && least; ++d) {
            if (lat.leq(a, d) && lat.leq(b, d) && !lat.leq(c, d)) least = false;
          }
          if (least) lub = c;
        }
        if (lat.leq(c, a) && lat.leq(c, b)) {
          bool greatest = true;
          for (Elem d = 0; d < n && greatest; ++d) {
            if (lat.leq(d, a) && lat.leq(d, b) && !lat.leq(d, c)) greatest = false;
          }
          if (greatest) glb = c;
        }
      }
      if (lub < 0) {
        throw error(errc::missing_join,
                    "pair {" + lat.name(a) + "," + lat.name(b) +
                        "} has no least upper bound",
                    {lat.name(a), lat.name(b)});
      }
      if (glb < 0) {
        throw error(errc::missing_meet,
                    "pair {" + lat.name(a) + "," + lat.name(b) +
                        "} has no greatest lower bound",
                    {lat.name(a), lat.name(b)});
      }
      lat.join_[a * n + b] = lub;
      lat.meet_[a * n + b] = glb;
    }
  }

  lat.bottom_ = 0;
  lat.top_ = 0;
  for (Elem a = 1; a < n; ++a) {
    lat.bottom_ = lat.meet(lat.bottom_, a);
    lat.top_ = lat.join(lat.top_, a);
  }
  return lat;
}

std::vector<char> well_below_table(const Lattice& lat, const Limits& limits) {
  const int n = lat.size();
  guard_subset_sweep(n, limits);
  const auto join_of = joins_by_mask(lat);

  std::vector<LSubset> up(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem d = 0; d < n; ++d) {
      if (lat.leq(a, d)) up[a] |= LSubset{1} << d;
    }
  }

  std::vector<char> wb(static_cast<std::size_t>(n) * n, 1);
  for (LSubset mask = 0; mask < (LSubset{1} << n); ++mask) {
    LSubset miss = 0;
    for (Elem a = 0; a < n; ++a) {
      if ((mask & up[a]) == 0) miss |= LSubset{1} << a;
    }
    if (miss == 0) continue;
    const Elem j = join_of[mask];
    for (Elem b = 0; b < n; ++b) {
      if (!lat.leq(b, j)) continue;
      for (LSubset rem = miss; rem != 0; rem &= rem - 1) {
        wb[lowest_bit(rem) * n + b] = 0;
      }
    }
  }
  return wb;
}

std::vector<char> well_above_table(const Lattice& lat, const Limits& limits) {
  const int n = lat.size();
  guard_subset_sweep(n, limits);
  const auto meet_of = meets_by_mask(lat);

  std::vector<LSubset> down(n, 0);
  for (Elem b = 0; b < n; ++b) {
    for (Elem d = 0; d < n; ++d) {
      if (lat.leq(d, b)) down[b] |= LSubset{1} << d;
    }
  }

  std::vector<char> wa(static_cast<std::size_t>(n) * n, 1);
  for (LSubset mask = 0; mask < (LSubset{1} << n); ++mask) {
    LSubset miss = 0;
    for (Elem b = 0; b < n; ++b) {
      if ((mask & down[b]) == 0) miss |= LSubset{1} << b;
    }
    if (miss == 0) continue;
    const Elem m = meet_of[mask];
    for (Elem a = 0; a < n; ++a) {
      if (!lat.leq(m, a)) continue;
      for (LSubset rem = miss; rem != 0; rem &= rem - 1) {
        wa[a * n + lowest_bit(rem)] = 0;
      }
    }
  }
  return wa;
}

bool well_below(const Lattice& lat, Elem alpha, Elem beta, const Limits& limits) {
  return well_below_table(lat, limits)[alpha * lat.size() + beta] != 0;
}

bool well_above(const Lattice& lat, Elem alpha, Elem beta, const Limits& limits) {
  return well_above_table(lat, limits)[alpha * lat.size() + beta] != 0;
}

bool is_completely_distributive(const Lattice& lat, const Limits& limits) {
  const int n = lat.size();
  const auto wb = well_below_table(lat, limits);
  for (Elem a = 0; a < n; ++a) {
    LSubset below = 0;
    for (Elem b = 0; b < n; ++b) {
      if (wb[b * n + a]) below |= LSubset{1} << b;
    }
    if (lat.join_all(below) != a) return false;
  }
  return true;
}

std::string subset_names(const Lattice& lat, LSubset s) {
  std::string out = "{";
  bool first = true;
  for (Elem a = 0; a < lat.size(); ++a) {
    if ((s & (LSubset{1} << a)) == 0) continue;
    if (!first) out += ",";
    out += lat.name(a);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace qvt
