#include "qvt/distance.hpp"

#include <bit>

namespace qvt {
namespace {

void guard_points(int n, const Limits& limits) {
  if (n > limits.distance_points_max) {
    throw error(errc::size_guard,
                "carrier too large for subset-indexed distance tables (limit " +
                    std::to_string(limits.distance_points_max) + ")",
                {std::to_string(n)});
  }
}

}  // namespace

PSubset alpha_closure(const Quantale& q, const ApproachDistance& d, PSubset a,
                      Elem alpha) {
  PSubset out = 0;
  for (int x = 0; x < d.carrier.size(); ++x) {
    if (q.leq(alpha, d.at(x, a))) out |= PSubset{1} << x;
  }
  return out;
}

void validate_distance(const Quantale& q, const ApproachDistance& d,
                       const Limits& limits) {
  const int n = d.carrier.size();
  guard_points(n, limits);
  if (d.values.size() != (static_cast<std::size_t>(n) << n)) {
    throw error(errc::arity_mismatch,
                "distance table does not cover X x P(X)",
                {std::to_string(d.values.size())});
  }
  const PSubset full = (PSubset{1} << n) - 1;

  for (int x = 0; x < n; ++x) {
    if (d.at(x, PSubset{1} << x) != q.top()) {
      throw error(errc::axiom_point,
                  "delta(" + d.carrier.name(x) + ",{" + d.carrier.name(x) +
                      "}) = " + q.name(d.at(x, PSubset{1} << x)) +
                      ", expected " + q.name(q.top()),
                  {d.carrier.name(x)});
    }
    if (d.at(x, 0) != q.bottom()) {
      throw error(errc::axiom_empty,
                  "delta(" + d.carrier.name(x) + ",{}) = " +
                      q.name(d.at(x, 0)) + ", expected " + q.name(q.bottom()),
                  {d.carrier.name(x)});
    }
  }

  // Appending single points generates every union, so checking
  // delta(x, A u {b}) = delta(x, A) v delta(x, {b}) covers axiom (iii).
  for (int x = 0; x < n; ++x) {
    for (PSubset a = 0; a <= full; ++a) {
      for (int b = 0; b < n; ++b) {
        const PSubset bs = PSubset{1} << b;
        const Elem lhs = d.at(x, a | bs);
        const Elem rhs = q.join(d.at(x, a), d.at(x, bs));
        if (lhs != rhs) {
          throw error(errc::axiom_union,
                      "delta(" + d.carrier.name(x) + "," +
                          subset_points(d.carrier, a | bs) + ") = " +
                          q.name(lhs) + " but the union of parts gives " +
                          q.name(rhs),
                      {d.carrier.name(x), subset_points(d.carrier, a),
                       subset_points(d.carrier, bs)});
        }
      }
    }
  }

  for (PSubset a = 0; a <= full; ++a) {
    for (Elem alpha = 0; alpha < q.size(); ++alpha) {
      const PSubset closure = alpha_closure(q, d, a, alpha);
      for (int x = 0; x < n; ++x) {
        if (!q.leq(q.star(d.at(x, closure), alpha), d.at(x, a))) {
          throw error(errc::axiom_tower,
                      "delta(" + d.carrier.name(x) + "," +
                          subset_points(d.carrier, a) +
                          ") is below delta of the " + q.name(alpha) +
                          "-closure " + subset_points(d.carrier, closure) +
                          " * " + q.name(alpha),
                      {d.carrier.name(x), subset_points(d.carrier, a),
                       q.name(alpha)});
        }
      }
    }
  }
}

bool is_valid_distance(const Quantale& q, const ApproachDistance& d,
                       const Limits& limits) {
  try {
    validate_distance(q, d, limits);
  } catch (const error& e) {
    if (e.is_size_guard()) throw;
    return false;
  }
  return true;
}

ApproachDistance distance_from_singletons(const Quantale& q, const Carrier& c,
                                          const std::vector<Elem>& rows,
                                          const Limits& limits) {
  const int n = c.size();
  guard_points(n, limits);
  if (rows.size() != static_cast<std::size_t>(n) * n) {
    throw error(errc::arity_mismatch,
                "singleton table needs one entry per point pair",
                {std::to_string(rows.size())});
  }
  ApproachDistance d{c, std::vector<Elem>(static_cast<std::size_t>(n) << n,
                                          q.bottom())};
  for (int x = 0; x < n; ++x) {
    for (PSubset a = 1; a < (PSubset{1} << n); ++a) {
      Elem v = q.bottom();
      for (PSubset rem = a; rem != 0; rem &= rem - 1) {
        v = q.join(v, rows[static_cast<std::size_t>(x) * n +
                           std::countr_zero(rem)]);
      }
      d.at(x, a) = v;
    }
  }
  return d;
}

LMetric distance_floor(const ApproachDistance& d) {
  const int n = d.carrier.size();
  LMetric f{n, std::vector<Elem>(static_cast<std::size_t>(n) * n)};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) f.at(x, y) = d.at(x, PSubset{1} << y);
  }
  return f;
}

std::string subset_points(const Carrier& c, PSubset a) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < c.size(); ++x) {
    if ((a & (PSubset{1} << x)) == 0) continue;
    if (!first) out += ",";
    out += c.name(x);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace qvt
