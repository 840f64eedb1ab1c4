#pragma once

#include <optional>

#include "qvt/space.hpp"

namespace qvt {

struct Diagnostic {
  std::string severity;
  std::string message;
  int line = 0;
  int column = 0;
  std::string hint;
};

// Semantic value of a parsed document: the order closure, the full star
// table, and fully resolved structure tables. Printing emits the canonical
// form (Hasse pairs, non-default entries); parse after print preserves ==.
struct StructureDoc {
  std::vector<std::string> elements;
  int bottom = -1;
  int top = -1;
  std::vector<char> leq;     // closed relation, elements.size()^2
  std::vector<Elem> star;    // full table, elements.size()^2
  std::vector<std::string> points;
  Presentation kind = Presentation::distance;

  // distance payload: |points| * 2^|points| table
  std::vector<Elem> distance;
  // gauge payload
  std::vector<std::string> metric_names;
  std::vector<std::vector<Elem>> metrics;
  // system payload, indexed by owning point
  std::vector<std::vector<std::string>> func_names;
  std::vector<std::vector<std::vector<Elem>>> funcs;

  bool operator==(const StructureDoc& other) const;
};

struct ParseResult {
  std::optional<StructureDoc> doc;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return doc.has_value(); }
};

ParseResult parse_document(const std::string& text);

std::string print_document(const StructureDoc& doc);

// Validates the quantale and the structure; throws qvt::error on failure.
Space load_space(const StructureDoc& doc,
                 const Limits& limits = Limits::defaults());

StructureDoc document_from_space(const Space& space);

}  // namespace qvt
