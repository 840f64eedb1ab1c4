#include "qvt/metric.hpp"

namespace qvt {

int Carrier::index_of(const std::string& name) const {
  for (int x = 0; x < size(); ++x) {
    if (points[x] == name) return x;
  }
  throw error(errc::unknown_element, "point not declared: " + name, {name});
}

Carrier validate_carrier(std::vector<std::string> points) {
  if (points.empty()) {
    throw error(errc::unknown_element, "carrier needs at least one point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw error(errc::duplicate_element, "point declared twice: " + points[i],
                    {points[i]});
      }
    }
  }
  return Carrier{std::move(points)};
}

void validate_lmetric(const Quantale& q, const Carrier& c, const LMetric& d) {
  const int n = c.size();
  if (d.n != n || static_cast<int>(d.v.size()) != n * n) {
    throw error(errc::arity_mismatch, "metric table does not match the carrier",
                {std::to_string(d.n)});
  }
  for (int x = 0; x < n; ++x) {
    if (d.at(x, x) != q.top()) {
      throw error(errc::not_reflexive_top,
                  "d(" + c.name(x) + "," + c.name(x) + ") = " +
                      q.name(d.at(x, x)) + ", expected " + q.name(q.top()),
                  {c.name(x)});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!q.leq(q.star(d.at(x, y), d.at(y, z)), d.at(x, z))) {
          throw error(errc::triangle_violation,
                      "d(" + c.name(x) + "," + c.name(y) + ") * d(" +
                          c.name(y) + "," + c.name(z) + ") exceeds d(" +
                          c.name(x) + "," + c.name(z) + ")",
                      {c.name(x), c.name(y), c.name(z)});
        }
      }
    }
  }
}

bool is_valid_lmetric(const Quantale& q, const Carrier& c, const LMetric& d) {
  const int n = c.size();
  if (d.n != n || static_cast<int>(d.v.size()) != n * n) return false;
  for (int x = 0; x < n; ++x) {
    if (d.at(x, x) != q.top()) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!q.leq(q.star(d.at(x, y), d.at(y, z)), d.at(x, z))) return false;
      }
    }
  }
  return true;
}

LMetric discrete_lmetric(const Quantale& q, const Carrier& c) {
  const int n = c.size();
  LMetric d{n, std::vector<Elem>(static_cast<std::size_t>(n) * n, q.bottom())};
  for (int x = 0; x < n; ++x) d.at(x, x) = q.top();
  return d;
}

LMetric constant_top_lmetric(const Quantale& q, const Carrier& c) {
  const int n = c.size();
  return LMetric{n, std::vector<Elem>(static_cast<std::size_t>(n) * n, q.top())};
}

LMetric pointwise_meet(const Quantale& q, const Carrier& c,
                       const std::vector<const LMetric*>& ds) {
  LMetric out = constant_top_lmetric(q, c);
  for (const LMetric* d : ds) {
    for (std::size_t i = 0; i < out.v.size(); ++i) {
      out.v[i] = q.meet(out.v[i], d->v[i]);
    }
  }
  return out;
}

bool pointwise_leq(const Quantale& q, const LMetric& a, const LMetric& b) {
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    if (!q.leq(a.v[i], b.v[i])) return false;
  }
  return true;
}

std::vector<LMetric> enumerate_lmetrics(const Quantale& q, const Carrier& c,
                                        const Limits& limits) {
  const int n = c.size();
  const int slots = n * n - n;  // off-diagonal entries; diagonal is forced
  std::int64_t candidates = 1;
  for (int i = 0; i < slots; ++i) {
    candidates *= q.size();
    if (candidates > limits.metric_enum_max) {
      throw error(errc::size_guard,
                  "metric enumeration exceeds " +
                      std::to_string(limits.metric_enum_max) + " candidates",
                  {std::to_string(n), std::to_string(q.size())});
    }
  }

  std::vector<LMetric> out;
  LMetric d = constant_top_lmetric(q, c);
  std::vector<std::size_t> idx;  // flat positions of the off-diagonal slots
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) idx.push_back(static_cast<std::size_t>(x) * n + y);
    }
  }
  std::vector<Elem> odo(idx.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) d.v[idx[i]] = odo[i];
    if (is_valid_lmetric(q, c, d)) out.push_back(d);
    std::size_t i = idx.size();
    while (i > 0 && odo[i - 1] == q.size() - 1) odo[--i] = 0;
    if (i == 0) break;
    ++odo[i - 1];
  }
  return out;
}

}  // namespace qvt
