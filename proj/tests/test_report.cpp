#include <doctest.h>

#include <json.hpp>
#include <string>

#include "helpers.hpp"
#include "qvt/axioms.hpp"
#include "qvt/report.hpp"

using namespace qvt;
using nlohmann::json;
using test::example_space;

TEST_SUITE("report") {
  TEST_CASE("text format renders one line per axiom and point") {
    const Space s = example_space("t0-not-t1.qvt");
    const std::string text =
        serialize_report(s, full_report(s), ReportFormat::text);
    CHECK(text ==
          "t0 a true\n"
          "t0 b false\n"
          "t0 c false\n"
          "t1 a false\n"
          "t1 b false\n"
          "t1 c false\n"
          "closed a true\n"
          "closed b false\n"
          "closed c false\n"
          "dconn false\n");
  }

  TEST_CASE("json report carries the fixture verdicts") {
    const Space s = example_space("t0-not-t1.qvt");
    const json j = json::parse(
        serialize_report(s, full_report(s), ReportFormat::json));
    CHECK(j["schema"] == 1);
    CHECK(j["method"] == "char");
    CHECK(j["t0"] == json({{"a", true}, {"b", false}, {"c", false}}));
    CHECK(j["t1"] == json({{"a", false}, {"b", false}, {"c", false}}));
    CHECK(j["closed"] == json({{"a", true}, {"b", false}, {"c", false}}));
    CHECK(j["dconn"] == false);
    CHECK(j["carrier"] == json::array({"a", "b", "c"}));
    CHECK(j["quantale"]["flags"]["integral"] == true);
  }

  TEST_CASE("json verdict values round trip") {
    const Space s = example_space("t0-not-t1.qvt");
    const Report r = full_report(s);
    const json j =
        json::parse(serialize_report(s, r, ReportFormat::json));
    for (int p = 0; p < s.carrier.size(); ++p) {
      const std::string& name = s.carrier.points[p];
      CHECK(j["t0"][name] == r.t0[p].result);
      CHECK(j["t1"][name] == r.t1[p].result);
      CHECK(j["closed"][name] == r.closed[p].result);
    }
    CHECK(j["dconn"] == r.dconn.result);
  }

  TEST_CASE("oracle method is echoed") {
    const Space s = example_space("d-connected.qvt");
    const json j = json::parse(serialize_report(
        s, full_report(s, Method::oracle), ReportFormat::json));
    CHECK(j["method"] == "oracle");
    CHECK(j["dconn"] == true);
  }

  TEST_CASE("single verdict lines") {
    const Space s = example_space("t0-not-t1.qvt");
    const Verdict t0b = t0_at(s, s.carrier.index_of("b"));
    const Verdict dc = d_connected(s);
    CHECK(serialize_verdicts(s, {t0b, dc}) == "t0 b false\ndconn false\n");
  }
}
