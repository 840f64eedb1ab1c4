#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qvt/gauge.hpp"

using namespace qvt;
using test::blur3;
using test::boolean_quantale;
using test::carrier;
using test::chain;
using test::diamond_lattice;
using test::meet_quantale;
using test::q0;

namespace {

// Direct axiom scan over every value table, diagonal included.
std::vector<LMetric> metrics_reference(const Quantale& q, const Carrier& c) {
  const int n = c.size();
  std::vector<LMetric> out;
  LMetric d{n, std::vector<Elem>(static_cast<std::size_t>(n) * n, 0)};
  const std::size_t cells = d.v.size();
  while (true) {
    if (is_valid_lmetric(q, c, d)) out.push_back(d);
    std::size_t i = 0;
    for (; i < cells; ++i) {
      if (++d.v[i] < q.size()) break;
      d.v[i] = 0;
    }
    if (i == cells) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("enumeration agrees with the direct axiom scan") {
    struct Case {
      Quantale q;
      int n;
    };
    const Case cases[] = {{boolean_quantale(), 2},
                          {boolean_quantale(), 3},
                          {meet_quantale(chain(3)), 2},
                          {blur3(), 2},
                          {q0(), 2}};
    for (const Case& cs : cases) {
      std::vector<std::string> names;
      for (int i = 0; i < cs.n; ++i) names.push_back("x" + std::to_string(i));
      const Carrier c = carrier(names);
      std::vector<LMetric> fast = enumerate_lmetrics(cs.q, c);
      std::vector<LMetric> slow = metrics_reference(cs.q, c);
      CAPTURE(cs.n);
      REQUIRE(fast.size() == slow.size());
      for (const LMetric& d : slow) {
        CHECK(std::find(fast.begin(), fast.end(), d) != fast.end());
      }
    }
  }

  TEST_CASE("discrete metric is the pointwise least") {
    const Quantale q = meet_quantale(chain(3));
    const Carrier c = carrier({"x", "y"});
    const LMetric disc = discrete_lmetric(q, c);
    CHECK(is_valid_lmetric(q, c, disc));
    for (const LMetric& d : enumerate_lmetrics(q, c)) {
      CHECK(pointwise_leq(q, disc, d));
    }
  }

  TEST_CASE("validator witnesses") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y", "z"});
    LMetric bad_diag = constant_top_lmetric(q, c);
    bad_diag.at(1, 1) = q.bottom();
    try {
      validate_lmetric(q, c, bad_diag);
      FAIL("expected not_reflexive_top");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_reflexive_top);
    }

    LMetric bad_tri = constant_top_lmetric(q, c);
    bad_tri.at(0, 2) = q.bottom();
    try {
      validate_lmetric(q, c, bad_tri);
      FAIL("expected triangle_violation");
    } catch (const error& e) {
      CHECK(e.code() == errc::triangle_violation);
    }
  }
}

TEST_SUITE("gauge") {
  TEST_CASE("blur quantale saturates every base to all metrics") {
    const Quantale z = q0();
    const Carrier c = carrier({"x", "y"});
    GaugeBase base{c, {"top"}, {constant_top_lmetric(z, c)}};
    base = validate_gauge_base(z, std::move(base));
    const std::vector<LMetric> gauge = enumerate_gauge(z, base);
    CHECK(gauge.size() == enumerate_lmetrics(z, c).size());
    CHECK(least_gauge_member(z, base) == discrete_lmetric(z, c));
    CHECK(base_meet(z, base) == constant_top_lmetric(z, c));
  }

  TEST_CASE("integral base meet equals the least member") {
    const Quantale q = meet_quantale(chain(3));
    const Carrier c = carrier({"x", "y"});
    LMetric e = constant_top_lmetric(q, c);
    e.at(0, 1) = 1;
    GaugeBase base = validate_gauge_base(q, GaugeBase{c, {"e"}, {e}});
    CHECK(base_meet(q, base) == e);
    CHECK(least_gauge_member(q, base) == e);
    const std::vector<LMetric> gauge = enumerate_gauge(q, base);
    CHECK(gauge.size() == 2);  // the free cell may rise from l1 to l2
    for (const LMetric& d : gauge) CHECK(pointwise_leq(q, e, d));
  }

  TEST_CASE("gauge is the up-set of its least member") {
    const Quantale z = blur3();
    const Carrier c = carrier({"x0", "x1"});
    LMetric g = constant_top_lmetric(z, c);
    g.at(0, 1) = 0;
    GaugeBase base = validate_gauge_base(z, GaugeBase{c, {"g0"}, {g}});
    const std::vector<LMetric> gauge = enumerate_gauge(z, base);
    CHECK(gauge.size() == 6);
    const LMetric least = least_gauge_member(z, base);
    // d(x1,x0) relaxes to l1 under the tensor blur; d(x0,x1) stays free.
    CHECK(least.at(0, 1) == 0);
    CHECK(least.at(1, 0) == 1);
    for (const LMetric& d : enumerate_lmetrics(z, c)) {
      const bool member =
          std::find(gauge.begin(), gauge.end(), d) != gauge.end();
      CHECK(member == pointwise_leq(z, least, d));
      CHECK(member == gauge_contains(z, base, d));
    }
  }

  TEST_CASE("meet gaps break local directedness on the diamond") {
    const Quantale q = meet_quantale(diamond_lattice());
    const Elem s = q.index_of("s"), t = q.index_of("t");

    // Two points: each metric covers the other's support tests, so the
    // incomparable pair is still directed.
    const Carrier two = carrier({"x", "y"});
    LMetric a1 = constant_top_lmetric(q, two);
    a1.at(0, 1) = s;
    LMetric a2 = constant_top_lmetric(q, two);
    a2.at(0, 1) = t;
    CHECK(is_locally_directed(q, two, {a1, a2}));

    // Three points with crossed rows at x: for alpha=s, omega=t neither
    // metric dominates the meet row at both y1 and y2.
    const Carrier c = carrier({"x", "y1", "y2"});
    LMetric e1 = discrete_lmetric(q, c);
    e1.at(0, 1) = t;
    e1.at(0, 2) = s;
    LMetric e2 = discrete_lmetric(q, c);
    e2.at(0, 1) = s;
    e2.at(0, 2) = t;
    validate_lmetric(q, c, e1);
    validate_lmetric(q, c, e2);
    CHECK_FALSE(is_locally_directed(q, c, {e1, e2}));
    try {
      validate_gauge_base(q, GaugeBase{c, {"e1", "e2"}, {e1, e2}});
      FAIL("expected not_locally_directed");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_locally_directed);
    }
    // Closing the base under meets repairs it.
    const LMetric both = pointwise_meet(q, c, {&e1, &e2});
    CHECK(is_locally_directed(q, c, {e1, e2, both}));
  }

  TEST_CASE("empty base is rejected") {
    const Quantale q = boolean_quantale();
    try {
      validate_gauge_base(q, GaugeBase{carrier({"x"}), {}, {}});
      FAIL("expected empty_base");
    } catch (const error& e) {
      CHECK(e.code() == errc::empty_base);
    }
  }

  TEST_CASE("effectively bottom pins") {
    const Quantale b = boolean_quantale();
    CHECK(effectively_bottom(b, b.bottom()));
    CHECK_FALSE(effectively_bottom(b, b.top()));

    const Quantale z = q0();
    CHECK(effectively_bottom(z, z.bottom()));
    CHECK(effectively_bottom(z, z.top()));

    const Quantale w = blur3();
    CHECK(effectively_bottom(w, 0));
    CHECK(effectively_bottom(w, 1));
    CHECK_FALSE(effectively_bottom(w, 2));
  }

}
