#include <doctest.h>

#include "helpers.hpp"
#include "qvt/transitions.hpp"

using namespace qvt;
using test::blur3;
using test::carrier;
using test::example_space;
using test::q0;

TEST_SUITE("transitions") {
  TEST_CASE("fixture round trip through the gauge presentation") {
    const Space s = example_space("t0-not-t1.qvt");
    const GaugeBase base = distance_to_gauge(s.quantale, s.distance());
    REQUIRE(base.metrics.size() == 1);
    CHECK(base.metrics[0] == distance_floor(s.distance()));
    const ApproachDistance back =
        gauge_to_distance(s.quantale, base, Mode::oracle);
    CHECK(back == s.distance());
  }

  TEST_CASE("fixture round trip through the system presentation") {
    const Space s = example_space("t0-not-t1.qvt");
    const SystemBase sys = distance_to_system(s.quantale, s.distance());
    const ApproachDistance back =
        system_to_distance(s.quantale, sys, Mode::base);
    CHECK(back == s.distance());
  }

  TEST_CASE("base and oracle gauge readings split on the blur quantale") {
    const Quantale z = q0();
    const Carrier c = carrier({"x", "y"});
    LMetric g = constant_top_lmetric(z, c);
    g.at(1, 0) = z.bottom();
    const GaugeBase base = validate_gauge_base(z, GaugeBase{c, {"g"}, {g}});

    const ApproachDistance lo = gauge_to_distance(z, base, Mode::base);
    CHECK(lo.at(0, PSubset{1} << 1) == z.top());
    CHECK(lo.at(1, PSubset{1} << 0) == z.bottom());

    // The saturated gauge contains the discrete metric, so the infimum over
    // the full gauge collapses every off-diagonal singleton.
    const ApproachDistance hi = gauge_to_distance(z, base, Mode::oracle);
    CHECK(hi.at(0, PSubset{1} << 1) == z.bottom());
    CHECK(hi.at(1, PSubset{1} << 0) == z.bottom());
  }

  TEST_CASE("base and oracle system readings split on the blur quantale") {
    const Quantale z = q0();
    const Carrier c = carrier({"x", "y"});
    const SystemBase sys = indiscrete_system_base(z, c);
    const ApproachDistance lo = system_to_distance(z, sys, Mode::base);
    CHECK(lo.at(0, PSubset{1} << 1) == z.top());
    const ApproachDistance hi = system_to_distance(z, sys, Mode::oracle);
    CHECK(hi.at(0, PSubset{1} << 1) == z.bottom());
  }

  TEST_CASE("gauge round trip inflates under the three-chain blur") {
    const Quantale z = blur3();
    const Carrier c = carrier({"x0", "x1"});
    LMetric g = constant_top_lmetric(z, c);
    g.at(0, 1) = 0;
    const GaugeBase base = validate_gauge_base(z, GaugeBase{c, {"g0"}, {g}});
    CHECK(enumerate_gauge(z, base).size() == 6);

    const ApproachDistance mid = gauge_to_distance(z, base, Mode::oracle);
    const GaugeBase back = distance_to_gauge(z, mid);
    // The floor of the distance regenerates a strictly larger gauge: the
    // support blur lowers rows further when applied to the smaller base.
    CHECK(enumerate_gauge(z, back).size() == 9);
  }

  TEST_CASE("distance to system and back is the identity") {
    const Space fixtures[] = {example_space("t0-not-t1.qvt"),
                              example_space("d-connected.qvt")};
    for (const Space& s : fixtures) {
      const SystemBase sys = distance_to_system(s.quantale, s.distance());
      CHECK(system_to_distance(s.quantale, sys, Mode::base) == s.distance());
    }
    // adversarial quantale, same identity
    const Quantale z = q0();
    const Carrier c = carrier({"x", "y"});
    const ApproachDistance d = distance_from_singletons(z, c, {1, 1, 0, 1});
    REQUIRE(is_valid_distance(z, d));
    const SystemBase sys = distance_to_system(z, d);
    CHECK(system_to_distance(z, sys, Mode::base) == d);
  }

  TEST_CASE("system to gauge carries the least members") {
    const Space s = example_space("t0-not-t1.qvt");
    const SystemBase sys = distance_to_system(s.quantale, s.distance());
    const GaugeBase gauge = system_to_gauge(s.quantale, sys);
    REQUIRE(gauge.metrics.size() == 1);
    CHECK(gauge.metrics[0] == distance_floor(s.distance()));
  }

  TEST_CASE("transition dispatch covers all presentation pairs") {
    const Space s = example_space("t0-not-t1.qvt");
    for (Presentation target :
         {Presentation::gauge, Presentation::distance, Presentation::system}) {
      const Space out = transition(s, target, Mode::oracle);
      CHECK(out.presentation() == target);
      const Space back = transition(out, Presentation::distance, Mode::oracle);
      CHECK(back.distance() == s.distance());
    }
  }
}
