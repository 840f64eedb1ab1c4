#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvt/document.hpp"

namespace qvt::test {

// n-chain l0 < l1 < ... with the bottom at index 0.
inline Lattice chain(int n) {
  LatticeSpec spec;
  for (int i = 0; i < n; ++i) spec.elements.push_back("l" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    spec.leq.push_back({spec.elements[i], spec.elements[i + 1]});
  return validate_lattice(spec);
}

inline Quantale meet_quantale(Lattice lat) {
  std::vector<Elem> star = meet_star_table(lat);
  return validate_quantale(std::move(lat), std::move(star));
}

inline Quantale boolean_quantale() { return meet_quantale(chain(2)); }

// 2-chain with top * top = bottom: the adversarial blur quantale.
inline Quantale q0() {
  Lattice lat = chain(2);
  return validate_quantale(std::move(lat), std::vector<Elem>(4, 0));
}

// 3-chain with l2 * l2 = l1 and every other product bottom.
inline Quantale blur3() {
  Lattice lat = chain(3);
  std::vector<Elem> star(9, 0);
  star[2 * 3 + 2] = 1;
  return validate_quantale(std::move(lat), std::move(star));
}

inline Lattice diamond_lattice() {
  LatticeSpec spec;
  spec.elements = {"bot", "s", "t", "top"};
  spec.leq = {{"bot", "s"}, {"bot", "t"}, {"s", "top"}, {"t", "top"}};
  return validate_lattice(spec);
}

inline Lattice m3_lattice() {
  LatticeSpec spec;
  spec.elements = {"bot", "p", "q", "r", "top"};
  spec.leq = {{"bot", "p"}, {"bot", "q"}, {"bot", "r"},
              {"p", "top"}, {"q", "top"}, {"r", "top"}};
  return validate_lattice(spec);
}

inline Carrier carrier(std::vector<std::string> names) {
  return validate_carrier(std::move(names));
}

inline Space space_from_text(const std::string& text) {
  ParseResult r = parse_document(text);
  if (!r.ok()) {
    throw std::runtime_error(
        "fixture parse failed: " +
        (r.diagnostics.empty() ? std::string("?") : r.diagnostics[0].message));
  }
  return load_space(*r.doc);
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string example_text(const std::string& name) {
  return slurp(std::string(QVT_EXAMPLES_DIR) + "/" + name);
}

inline Space example_space(const std::string& name) {
  return space_from_text(example_text(name));
}

}  // namespace qvt::test
