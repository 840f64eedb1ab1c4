#pragma once

#include "qvt/axioms.hpp"

namespace qvt {

enum class ReportFormat { text, json };

// Text: one line per (axiom, point), "t0 a true"; d-connectedness renders
// as "dconn true". JSON: schema 1, stable field order.
std::string serialize_report(const Space& space, const Report& report,
                             ReportFormat format);

std::string serialize_verdicts(const Space& space,
                               const std::vector<Verdict>& verdicts);

}  // namespace qvt
