#include "qvt/gauge.hpp"

#include <bit>

namespace qvt {

bool effectively_bottom(const Quantale& q, Elem v) {
  for (Elem alpha : q.wb_top()) {
    for (Elem omega : q.wa_bot()) {
      if (!q.leq(q.star(v, alpha), omega)) return false;
    }
  }
  return true;
}

bool locally_supported(const Quantale& q, const LMetric& d,
                       const std::vector<LMetric>& h) {
  const int n = d.n;
  for (int x = 0; x < n; ++x) {
    for (Elem alpha : q.wb_top()) {
      for (Elem omega : q.wa_bot()) {
        bool found = false;
        for (const LMetric& e : h) {
          bool fits = true;
          for (int y = 0; y < n && fits; ++y) {
            if (!q.leq(q.star(e.at(x, y), alpha), q.join(d.at(x, y), omega))) {
              fits = false;
            }
          }
          if (fits) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_locally_directed(const Quantale& q, const Carrier& c,
                         const std::vector<LMetric>& h, const Limits& limits) {
  const int m = static_cast<int>(h.size());
  if (m > limits.directed_subset_max) {
    throw error(errc::size_guard,
                "base too large for exhaustive directedness check (limit " +
                    std::to_string(limits.directed_subset_max) + ")",
                {std::to_string(m)});
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<const LMetric*> part;
    for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1) {
      part.push_back(&h[std::countr_zero(rem)]);
    }
    if (!locally_supported(q, pointwise_meet(q, c, part), h)) return false;
  }
  return true;
}

GaugeBase validate_gauge_base(const Quantale& q, GaugeBase base,
                              const Limits& limits) {
  if (base.metrics.empty()) {
    throw error(errc::empty_base, "gauge base needs at least one metric");
  }
  if (base.names.size() != base.metrics.size()) {
    base.names.resize(base.metrics.size());
    for (std::size_t i = 0; i < base.names.size(); ++i) {
      if (base.names[i].empty()) base.names[i] = "d" + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < base.metrics.size(); ++i) {
    validate_lmetric(q, base.carrier, base.metrics[i]);
  }
  if (!is_locally_directed(q, base.carrier, base.metrics, limits)) {
    throw error(errc::not_locally_directed,
                "some subset's pointwise meet is not locally supported");
  }
  return base;
}

bool gauge_contains(const Quantale& q, const GaugeBase& base, const LMetric& d) {
  return is_valid_lmetric(q, base.carrier, d) &&
         locally_supported(q, d, base.metrics);
}

LMetric base_meet(const Quantale& q, const GaugeBase& base) {
  std::vector<const LMetric*> all;
  all.reserve(base.metrics.size());
  for (const LMetric& d : base.metrics) all.push_back(&d);
  return pointwise_meet(q, base.carrier, all);
}

std::vector<LMetric> enumerate_gauge(const Quantale& q, const GaugeBase& base,
                                     const Limits& limits) {
  const std::vector<LMetric> valid = enumerate_lmetrics(q, base.carrier, limits);
  std::vector<LMetric> gauge;
  std::vector<char> member(valid.size(), 0);
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (locally_supported(q, valid[i], base.metrics)) {
      member[i] = 1;
      gauge.push_back(valid[i]);
    }
  }
  if (gauge.empty()) {
    throw error(errc::gauge_axioms, "generated gauge is empty");
  }
  // A finite gauge is the up-set of its least member among valid metrics;
  // verifying that shape covers up-closure, meet-closure and saturation.
  std::vector<const LMetric*> all;
  all.reserve(gauge.size());
  for (const LMetric& d : gauge) all.push_back(&d);
  const LMetric least = pointwise_meet(q, base.carrier, all);
  if (!locally_supported(q, least, base.metrics)) {
    throw error(errc::gauge_axioms,
                "pointwise meet of the gauge is not a member");
  }
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (member[i] != (pointwise_leq(q, least, valid[i]) ? 1 : 0)) {
      throw error(errc::gauge_axioms,
                  "gauge is not the up-set of its least member");
    }
  }
  return gauge;
}

LMetric least_gauge_member(const Quantale& q, const GaugeBase& base,
                           const Limits& limits) {
  const std::vector<LMetric> gauge = enumerate_gauge(q, base, limits);
  std::vector<const LMetric*> all;
  all.reserve(gauge.size());
  for (const LMetric& d : gauge) all.push_back(&d);
  return pointwise_meet(q, base.carrier, all);
}

}  // namespace qvt
