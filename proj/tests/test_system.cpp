#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qvt/system.hpp"
#include "qvt/transitions.hpp"

using namespace qvt;
using test::boolean_quantale;
using test::carrier;
using test::chain;
using test::example_space;
using test::meet_quantale;
using test::q0;

TEST_SUITE("system") {
  TEST_CASE("discrete and indiscrete bases validate") {
    for (const Quantale& q : {boolean_quantale(), q0()}) {
      const Carrier c = carrier({"x", "y"});
      const SystemBase disc = discrete_system_base(q, c);
      const SystemBase indisc = indiscrete_system_base(q, c);
      CHECK(least_member(q, disc, 0)[0] == q.top());
      CHECK(least_member(q, disc, 0)[1] == q.bottom());
      CHECK(least_member(q, indisc, 1)[0] == q.top());
      validate_system_base(q, disc);
      validate_system_base(q, indisc);
    }
  }

  TEST_CASE("mixing axiom rejects a broken triangle through a third point") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y", "z"});
    SystemBase base{c,
                    {{"px"}, {"py"}, {"pz"}},
                    {{{1, 0, 1}}, {{0, 1, 0}}, {{0, 1, 1}}}};
    try {
      validate_system_base(q, base);
      FAIL("expected mixing_fails");
    } catch (const error& e) {
      CHECK(e.code() == errc::mixing_fails);
    }
  }

  TEST_CASE("members must sit at top on their own point") {
    const Quantale q = boolean_quantale();
    const Carrier c = carrier({"x", "y"});
    SystemBase base{c, {{"px"}, {"py"}}, {{{0, 0}}, {{0, 1}}}};
    try {
      validate_system_base(q, base);
      FAIL("expected not_top_at_point");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_top_at_point);
    }
  }

  TEST_CASE("filter base needs pairwise lower bounds") {
    const Quantale q = meet_quantale(test::diamond_lattice());
    const Carrier c = carrier({"x", "y"});
    const Elem s = q.index_of("s"), t = q.index_of("t");
    SystemBase base{c,
                    {{"p1", "p2"}, {"py"}},
                    {{{q.top(), s}, {q.top(), t}}, {{q.bottom(), q.top()}}}};
    try {
      validate_system_base(q, base);
      FAIL("expected not_filter_base");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_filter_base);
    }
  }

  TEST_CASE("least member of a chain of members") {
    const Quantale q = meet_quantale(chain(3));
    const Carrier c = carrier({"x", "y"});
    SystemBase base{c,
                    {{"hi", "lo"}, {"py"}},
                    {{{2, 1}, {2, 0}}, {{2, 2}}}};
    const SystemBase v = validate_system_base(q, base);
    CHECK(least_member(q, v, 0) == FuncTable{2, 0});
  }

  TEST_CASE("membership matches enumeration") {
    struct Case {
      Quantale q;
      const char* label;
    };
    const Case cases[] = {{boolean_quantale(), "boolean"}, {q0(), "blur"}};
    for (const Case& cs : cases) {
      const Carrier c = carrier({"x", "y"});
      const SystemBase base = discrete_system_base(cs.q, c);
      for (int x = 0; x < 2; ++x) {
        const std::vector<FuncTable> members =
            enumerate_system_at(cs.q, base, x);
        FuncTable phi(2, 0);
        for (phi[0] = 0; phi[0] < cs.q.size(); ++phi[0]) {
          for (phi[1] = 0; phi[1] < cs.q.size(); ++phi[1]) {
            const bool listed =
                std::find(members.begin(), members.end(), phi) != members.end();
            const bool supported = system_contains(cs.q, base, x, phi);
            CAPTURE(cs.label);
            CAPTURE(x);
            CHECK(listed == (supported && phi[x] == cs.q.top()));
          }
        }
      }
    }
  }

  TEST_CASE("blur quantale supports every function") {
    const Quantale z = q0();
    const Carrier c = carrier({"x", "y"});
    const SystemBase base = indiscrete_system_base(z, c);
    // support blur swallows the whole function space at each point
    CHECK(enumerate_system_at(z, base, 0).size() == 2);  // phi(x) = top filter
    FuncTable all_bottom_elsewhere{z.top(), z.bottom()};
    CHECK(system_contains(z, base, 0, all_bottom_elsewhere));
  }

  TEST_CASE("fixture distance induces singleton bases") {
    const Space s = example_space("t0-not-t1.qvt");
    const SystemBase sys = distance_to_system(s.quantale, s.distance());
    const int b = s.carrier.index_of("b");
    const FuncTable& psi_b = least_member(s.quantale, sys, b);
    CHECK(s.quantale.name(psi_b[s.carrier.index_of("a")]) == "0");
    CHECK(s.quantale.name(psi_b[s.carrier.index_of("c")]) == "1/5");
    CHECK(psi_b[b] == s.quantale.top());
    validate_system_base(s.quantale, sys);
  }
}
