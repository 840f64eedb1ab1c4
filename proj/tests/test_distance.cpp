#include <doctest.h>

#include "helpers.hpp"
#include "qvt/distance.hpp"

using namespace qvt;
using test::boolean_quantale;
using test::carrier;
using test::example_space;

TEST_SUITE("distance") {
  TEST_CASE("three-point fixture table values") {
    const Space s = example_space("t0-not-t1.qvt");
    const Quantale& q = s.quantale;
    const ApproachDistance& d = s.distance();
    const int a = s.carrier.index_of("a");
    const int b = s.carrier.index_of("b");
    const int c = s.carrier.index_of("c");
    auto one = [](int x) { return PSubset{1} << x; };

    CHECK(q.name(d.at(a, one(b))) == "1/2");
    CHECK(q.name(d.at(a, one(c))) == "1/4");
    CHECK(q.name(d.at(b, one(a))) == "0");
    CHECK(q.name(d.at(b, one(c))) == "1/5");
    CHECK(q.name(d.at(c, one(a))) == "0");
    CHECK(q.name(d.at(c, one(b))) == "1/3");
    // diagonal and empty-set defaults
    CHECK(d.at(a, one(a)) == q.top());
    CHECK(d.at(b, 0) == q.bottom());
    // union rows as listed
    CHECK(q.name(d.at(a, one(b) | one(c))) == "1/2");
    CHECK(q.name(d.at(b, one(a) | one(c))) == "1/5");
    CHECK(q.name(d.at(c, one(a) | one(b))) == "1/3");
    // full validation including the tower axiom
    validate_distance(q, d);
  }

  TEST_CASE("connected fixture validates and sits at top off-diagonal") {
    const Space s = example_space("d-connected.qvt");
    const Quantale& q = s.quantale;
    const ApproachDistance& d = s.distance();
    validate_distance(q, d);
    for (int x = 0; x < s.carrier.size(); ++x) {
      for (int y = 0; y < s.carrier.size(); ++y) {
        if (x == y) continue;
        CHECK(d.at(x, PSubset{1} << y) == q.top());
      }
    }
  }

  TEST_CASE("union completion from singletons") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y", "z"});
    // rows[x*n+y] = delta(x,{y})
    const std::vector<Elem> rows = {1, 1, 0, 0, 1, 0, 0, 0, 1};
    const ApproachDistance d = distance_from_singletons(q, c, rows);
    CHECK(d.at(0, 0b110) == 1);  // {y,z} joins top and bottom
    CHECK(d.at(1, 0b101) == 0);  // {x,z} joins two bottoms
    CHECK(d.at(2, 0b111) == 1);  // any set containing the point itself
    for (int x = 0; x < 3; ++x) {
      for (PSubset a = 0; a < 8; ++a) {
        for (PSubset b = 0; b < 8; ++b) {
          CHECK(d.at(x, a | b) == q.join(d.at(x, a), d.at(x, b)));
        }
      }
    }
  }

  TEST_CASE("alpha closure") {
    const Space s = example_space("t0-not-t1.qvt");
    const Quantale& q = s.quantale;
    const ApproachDistance& d = s.distance();
    const int a = s.carrier.index_of("a");
    const int b = s.carrier.index_of("b");
    const PSubset set_b = PSubset{1} << b;
    // closure of {b} at 1/2 pulls in a (delta(a,{b}) = 1/2) but not c (1/3).
    const PSubset cl = alpha_closure(q, d, set_b, q.index_of("1/2"));
    CHECK((cl & (PSubset{1} << a)) != 0);
    CHECK((cl & set_b) != 0);
    CHECK((cl & (PSubset{1} << s.carrier.index_of("c"))) == 0);
    // closure at bottom is everything
    CHECK(alpha_closure(q, d, set_b, q.bottom()) == 0b111);
  }

  TEST_CASE("axiom rejections") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y"});
    ApproachDistance good =
        distance_from_singletons(q, c, {1, 1, 1, 1});
    validate_distance(q, good);

    ApproachDistance bad_point = good;
    bad_point.at(0, 0b01) = q.bottom();
    try {
      validate_distance(q, bad_point);
      FAIL("expected axiom_point");
    } catch (const error& e) {
      CHECK(e.code() == errc::axiom_point);
    }

    ApproachDistance bad_empty = good;
    bad_empty.at(1, 0) = q.top();
    try {
      validate_distance(q, bad_empty);
      FAIL("expected axiom_empty");
    } catch (const error& e) {
      CHECK(e.code() == errc::axiom_empty);
    }

    ApproachDistance bad_union = good;
    bad_union.at(0, 0b11) = q.bottom();
    try {
      validate_distance(q, bad_union);
      FAIL("expected axiom_union");
    } catch (const error& e) {
      CHECK(e.code() == errc::axiom_union);
    }
  }

  TEST_CASE("tower axiom is not implied by the other three") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y", "z"});
    // delta(x,{y}) = top and delta(y,{z}) = top but delta(x,{z}) = bottom:
    // the closure of {z} at top contains y, so the tower demands
    // delta(x,{z}) >= delta(x,{y,z}) * top = top.
    const std::vector<Elem> rows = {1, 1, 0, 0, 1, 1, 0, 0, 1};
    const ApproachDistance d = distance_from_singletons(q, c, rows);
    CHECK_FALSE(is_valid_distance(q, d));
    try {
      validate_distance(q, d);
      FAIL("expected axiom_tower");
    } catch (const error& e) {
      CHECK(e.code() == errc::axiom_tower);
      CHECK_FALSE(e.subjects().empty());
    }
  }

  TEST_CASE("floor reads singletons back as a metric") {
    const Space s = example_space("t0-not-t1.qvt");
    const LMetric f = distance_floor(s.distance());
    validate_lmetric(s.quantale, s.carrier, f);
    CHECK(s.quantale.name(f.at(s.carrier.index_of("a"),
                               s.carrier.index_of("b"))) == "1/2");
  }

  TEST_CASE("subset rendering") {
    const Carrier c = carrier({"a", "b", "c"});
    CHECK(subset_points(c, 0) == "{}");
    CHECK(subset_points(c, 0b101) == "{a,c}");
  }

  TEST_CASE("size guard on wide carriers") {
    const Quantale q = boolean_quantale();
    std::vector<std::string> pts;
    for (int i = 0; i < 13; ++i) pts.push_back("p" + std::to_string(i));
    const Carrier c = carrier(pts);
    std::vector<Elem> rows(static_cast<std::size_t>(13) * 13, 1);
    try {
      distance_from_singletons(q, c, rows);
      FAIL("expected size_guard");
    } catch (const error& e) {
      CHECK(e.is_size_guard());
    }
  }
}
