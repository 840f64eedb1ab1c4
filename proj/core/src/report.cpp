#include "qvt/report.hpp"

#include <json.hpp>

namespace qvt {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string verdict_line(const Space& space, const Verdict& v) {
  std::string line = axiom_name(v.axiom);
  if (v.point >= 0) line += " " + space.carrier.name(v.point);
  line += v.result ? " true" : " false";
  return line;
}

ordered_json point_map(const Space& space, const std::vector<Verdict>& vs) {
  ordered_json out = ordered_json::object();
  for (const Verdict& v : vs) {
    out[space.carrier.name(v.point)] = v.result;
  }
  return out;
}

}  // namespace

std::string serialize_verdicts(const Space& space,
                               const std::vector<Verdict>& verdicts) {
  std::string out;
  for (const Verdict& v : verdicts) {
    out += verdict_line(space, v) + "\n";
  }
  return out;
}

std::string serialize_report(const Space& space, const Report& report,
                             ReportFormat format) {
  if (format == ReportFormat::text) {
    std::string out;
    out += serialize_verdicts(space, report.t0);
    out += serialize_verdicts(space, report.t1);
    out += serialize_verdicts(space, report.closed);
    out += verdict_line(space, report.dconn) + "\n";
    return out;
  }

  const Quantale& q = space.quantale;
  ordered_json j;
  j["schema"] = 1;
  j["carrier"] = ordered_json::array();
  for (const std::string& p : space.carrier.points) j["carrier"].push_back(p);
  ordered_json elements = ordered_json::array();
  for (Elem a = 0; a < q.size(); ++a) elements.push_back(q.name(a));
  j["quantale"] = {
      {"elements", elements},
      {"flags",
       {{"commutative", q.commutative()},
        {"integral", q.integral()},
        {"completely_distributive", q.completely_distributive()}}}};
  const Method m = report.dconn.method;
  j["method"] = method_name(m);
  j["t0"] = point_map(space, report.t0);
  j["t1"] = point_map(space, report.t1);
  j["closed"] = point_map(space, report.closed);
  j["dconn"] = report.dconn.result;
  return j.dump(2) + "\n";
}

}  // namespace qvt
