#include "qvt/quantale.hpp"

#include <bit>

namespace qvt {

std::vector<Elem> meet_star_table(const Lattice& lat) {
  const int n = lat.size();
  std::vector<Elem> star(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) star[a * n + b] = lat.meet(a, b);
  }
  return star;
}

Quantale validate_quantale(Lattice lat, std::vector<Elem> star,
                           const Limits& limits) {
  const int n = lat.size();
  if (static_cast<int>(star.size()) != n * n) {
    throw error(errc::arity_mismatch,
                "star table needs one entry per element pair", {"star"});
  }
  for (Elem v : star) {
    if (v < 0 || v >= n) {
      throw error(errc::unknown_element, "star table entry out of range",
                  {std::to_string(v)});
    }
  }

  auto at = [&](Elem a, Elem b) { return star[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw error(errc::not_associative,
                      "(" + lat.name(a) + "*" + lat.name(b) + ")*" +
                          lat.name(c) + " differs from " + lat.name(a) + "*(" +
                          lat.name(b) + "*" + lat.name(c) + ")",
                      {lat.name(a), lat.name(b), lat.name(c)});
        }
      }
    }
  }

  if (n > limits.lattice_exhaustive_max) {
    throw error(errc::size_guard,
                "lattice too large for exhaustive subset sweep (limit " +
                    std::to_string(limits.lattice_exhaustive_max) + ")",
                {std::to_string(n)});
  }
  for (Elem b = 0; b < n; ++b) {
    for (LSubset s = 0; s < (LSubset{1} << n); ++s) {
      const Elem js = lat.join_all(s);
      Elem left_fold = lat.bottom(), right_fold = lat.bottom();
      for (LSubset rem = s; rem != 0; rem &= rem - 1) {
        const Elem e = std::countr_zero(rem);
        left_fold = lat.join(left_fold, at(b, e));
        right_fold = lat.join(right_fold, at(e, b));
      }
      if (at(b, js) != left_fold) {
        throw error(errc::not_join_distributive,
                    lat.name(b) + " * join" + subset_names(lat, s) +
                        " is " + lat.name(at(b, js)) + " but the join of " +
                        "products is " + lat.name(left_fold),
                    {"left", lat.name(b), subset_names(lat, s)});
      }
      if (at(js, b) != right_fold) {
        throw error(errc::not_join_distributive,
                    "join" + subset_names(lat, s) + " * " + lat.name(b) +
                        " is " + lat.name(at(js, b)) + " but the join of " +
                        "products is " + lat.name(right_fold),
                    {"right", lat.name(b), subset_names(lat, s)});
      }
    }
  }

  Quantale q;
  q.lat_ = std::move(lat);
  q.star_ = std::move(star);

  q.commutative_ = true;
  for (Elem a = 0; a < n && q.commutative_; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (q.star_[a * n + b] != q.star_[b * n + a]) {
        q.commutative_ = false;
        break;
      }
    }
  }
  q.integral_ = true;
  for (Elem a = 0; a < n; ++a) {
    if (q.star_[a * n + q.lat_.top()] != a ||
        q.star_[q.lat_.top() * n + a] != a) {
      q.integral_ = false;
      break;
    }
  }
  q.cdistributive_ = is_completely_distributive(q.lat_, limits);

  q.wb_ = well_below_table(q.lat_, limits);
  q.wa_ = well_above_table(q.lat_, limits);
  for (Elem a = 0; a < n; ++a) {
    if (q.wb_[a * n + q.lat_.top()]) q.wb_top_.push_back(a);
    if (q.wa_[q.lat_.bottom() * n + a]) q.wa_bot_.push_back(a);
  }
  return q;
}

Elem support_floor(const Quantale& q, Elem v) {
  Elem floor = q.top();
  for (Elem u = 0; u < q.size(); ++u) {
    bool admissible = true;
    for (Elem alpha : q.wb_top()) {
      for (Elem omega : q.wa_bot()) {
        if (!q.leq(q.star(v, alpha), q.join(u, omega))) {
          admissible = false;
          break;
        }
      }
      if (!admissible) break;
    }
    if (admissible) floor = q.meet(floor, u);
  }
  return floor;
}

}  // namespace qvt
