#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "qvt/axioms.hpp"
#include "qvt/transitions.hpp"

using namespace qvt;
using test::boolean_quantale;
using test::blur3;
using test::carrier;
using test::chain;
using test::diamond_lattice;
using test::example_space;
using test::meet_quantale;

namespace {

std::vector<bool> char_row(const Space& s, Verdict (*axiom)(const Space&, int,
                                                            const Limits&)) {
  std::vector<bool> out;
  for (int p = 0; p < s.carrier.size(); ++p) {
    out.push_back(axiom(s, p, Limits::defaults()).result);
  }
  return out;
}

Space sierpinski() {
  const Quantale q = boolean_quantale();
  const Carrier c = carrier({"x", "y"});
  ApproachDistance d = distance_from_singletons(q, c, {1, 1, 0, 1});
  validate_distance(q, d);
  return Space{q, c, std::move(d)};
}

Space diamond_skew_gauge() {
  const Quantale q = meet_quantale(diamond_lattice());
  const Carrier c = carrier({"b", "p"});
  LMetric e = constant_top_lmetric(q, c);
  e.at(0, 1) = q.index_of("s");
  e.at(1, 0) = q.index_of("t");
  GaugeBase base = validate_gauge_base(q, GaugeBase{c, {"e"}, {e}});
  return Space{q, c, std::move(base)};
}

Space midpoint_gauge() {
  const Quantale q = meet_quantale(chain(3));
  const Carrier c = carrier({"x", "y"});
  LMetric e = constant_top_lmetric(q, c);
  e.at(0, 1) = 1;
  e.at(1, 0) = 1;
  GaugeBase base = validate_gauge_base(q, GaugeBase{c, {"e"}, {e}});
  return Space{q, c, std::move(base)};
}

}  // namespace

TEST_SUITE("axioms") {
  TEST_CASE("three-point fixture verdicts") {
    const Space s = example_space("t0-not-t1.qvt");
    CHECK(char_row(s, t0_at) == std::vector<bool>{true, false, false});
    CHECK(char_row(s, t1_at) == std::vector<bool>{false, false, false});
    CHECK(char_row(s, closed_at) == std::vector<bool>{true, false, false});
    CHECK_FALSE(d_connected(s).result);
  }

  TEST_CASE("three-point fixture witnesses") {
    const Space s = example_space("t0-not-t1.qvt");
    const Verdict v = t0_at(s, s.carrier.index_of("b"));
    REQUIRE_FALSE(v.result);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0].x == s.carrier.index_of("c"));
    CHECK(v.witnesses[0].note.find("delta(c,{b})=1/3") != std::string::npos);
  }

  TEST_CASE("fixture verdicts agree across presentations on the meet chain") {
    for (const char* name : {"t0-not-t1.qvt", "d-connected.qvt"}) {
      const Space s = example_space(name);
      const Space g = transition(s, Presentation::gauge, Mode::oracle);
      const Space a = transition(s, Presentation::system, Mode::oracle);
      for (int p = 0; p < s.carrier.size(); ++p) {
        CAPTURE(name);
        CAPTURE(p);
        CHECK(t0_at(s, p).result == t0_at(g, p).result);
        CHECK(t0_at(s, p).result == t0_at(a, p).result);
        CHECK(t1_at(s, p).result == t1_at(g, p).result);
        CHECK(t1_at(s, p).result == t1_at(a, p).result);
        CHECK(closed_at(s, p).result == closed_at(g, p).result);
        CHECK(closed_at(s, p).result == closed_at(a, p).result);
      }
      CHECK(d_connected(s).result == d_connected(g).result);
      CHECK(d_connected(s).result == d_connected(a).result);
    }
  }

  TEST_CASE("connected fixture verdicts") {
    const Space s = example_space("d-connected.qvt");
    CHECK(d_connected(s).result);
    CHECK(char_row(s, t0_at) == std::vector<bool>{false, false, false});
    CHECK(d_connected_oracle(s).result);
  }

  TEST_CASE("boolean two-point space splits dconn readings") {
    const Space s = sierpinski();
    CHECK_FALSE(d_connected(s).result);
    CHECK(d_connected_oracle(s).result);
  }

  TEST_CASE("diamond gauge splits the separation readings") {
    const Space s = diamond_skew_gauge();
    for (int p = 0; p < 2; ++p) {
      CAPTURE(p);
      CHECK_FALSE(t0_at(s, p).result);
      CHECK(t0_oracle(s, p).result);
      CHECK_FALSE(closed_at(s, p).result);
      CHECK(closed_oracle(s, p).result);
      CHECK_FALSE(t1_at(s, p).result);
      CHECK_FALSE(t1_oracle(s, p).result);
    }
  }

  TEST_CASE("three-chain midpoint gauge splits dconn") {
    const Space s = midpoint_gauge();
    CHECK_FALSE(d_connected(s).result);
    CHECK(d_connected_oracle(s).result);
    // separation readings agree here
    CHECK(t0_at(s, 0).result == t0_oracle(s, 0).result);
  }

  TEST_CASE("discrete gauge separates and disconnects") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y"});
    const Space s{q, c, discrete_gauge_base(q, c)};
    for (int p = 0; p < 2; ++p) {
      CHECK(t0_at(s, p).result);
      CHECK(t1_at(s, p).result);
      CHECK(closed_at(s, p).result);
      CHECK(t1_oracle(s, p).result);
    }
    CHECK_FALSE(d_connected(s).result);
    CHECK_FALSE(d_connected_oracle(s).result);
  }

  TEST_CASE("singleton carriers satisfy every axiom") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x"});
    const Space s{q, c, discrete_gauge_base(q, c)};
    CHECK(t0_at(s, 0).result);
    CHECK(t1_at(s, 0).result);
    CHECK(closed_at(s, 0).result);
    CHECK(t0_oracle(s, 0).result);
    CHECK(t1_oracle(s, 0).result);
    CHECK(closed_oracle(s, 0).result);
    CHECK(d_connected(s).result);
    CHECK(d_connected_oracle(s).result);
  }

  TEST_CASE("exists clauses are vacuous") {
    const Quantale z = blur3();
    const Carrier c = carrier({"x0", "x1"});
    LMetric g = constant_top_lmetric(z, c);
    g.at(0, 1) = 0;
    const GaugeBase base = validate_gauge_base(z, GaugeBase{c, {"g0"}, {g}});
    // the constant-top metric always witnesses the literal clause
    CHECK(dconn_gauge_exists_clause(z, base));
    CHECK_FALSE(d_connected(Space{z, c, base}).result);

    const Quantale q = boolean_quantale();
    const SystemBase disc = discrete_system_base(q, carrier({"x", "y"}));
    CHECK(dconn_system_exists_clause(q, disc));
    CHECK_FALSE(d_connected(Space{q, carrier({"x", "y"}), disc}).result);
  }

  TEST_CASE("closed oracle copies") {
    // two points keep the truncated product under the size guard at n=4
    const Space s = diamond_skew_gauge();
    CHECK(closed_oracle(s, 0, 3).result == closed_oracle(s, 0, 4).result);
    CHECK(closed_oracle(s, 1, 3).result == closed_oracle(s, 1, 4).result);
    const Space fixture = example_space("t0-not-t1.qvt");
    try {
      closed_oracle(fixture, 0, 1);
      FAIL("expected arity_mismatch");
    } catch (const error& e) {
      CHECK(e.code() == errc::arity_mismatch);
    }
  }

  TEST_CASE("basepoint bounds are checked") {
    const Space s = example_space("t0-not-t1.qvt");
    for (int p : {-1, 3}) {
      try {
        t0_at(s, p);
        FAIL("expected basepoint_missing");
      } catch (const error& e) {
        CHECK(e.code() == errc::basepoint_missing);
      }
    }
  }

  TEST_CASE("contractions to the discrete pair") {
    const Space s = example_space("d-connected.qvt");
    const GaugeBase from = transition(s, Presentation::gauge, Mode::oracle).gauge();
    const Carrier pair = carrier({"0", "1"});
    const GaugeBase to = discrete_gauge_base(s.quantale, pair);
    PointMap constant{s.carrier, pair, {0, 0, 0}};
    CHECK(is_contraction(s.quantale, constant, from, to));
    PointMap split{s.carrier, pair, {0, 1, 1}};
    CHECK_FALSE(is_contraction(s.quantale, split, from, to));
  }

  TEST_CASE("full report shape") {
    const Space s = example_space("t0-not-t1.qvt");
    const Report r = full_report(s);
    CHECK(r.t0.size() == 3);
    CHECK(r.t1.size() == 3);
    CHECK(r.closed.size() == 3);
    CHECK(r.dconn.method == Method::characterization);
    const Report o = full_report(s, Method::oracle);
    CHECK(o.dconn.method == Method::oracle);
    CHECK(o.t0[0].result);
  }
}
