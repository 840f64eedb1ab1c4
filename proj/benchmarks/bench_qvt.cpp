#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qvt/axioms.hpp"
#include "qvt/document.hpp"
#include "qvt/gauge.hpp"
#include "qvt/harness.hpp"

namespace {

using namespace qvt;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Lattice chain(int n) {
  LatticeSpec spec;
  for (int i = 0; i < n; ++i) spec.elements.push_back("l" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    spec.leq.push_back({spec.elements[i], spec.elements[i + 1]});
  return validate_lattice(spec);
}

Quantale meet_chain(int n) {
  Lattice lat = chain(n);
  std::vector<Elem> star = meet_star_table(lat);
  return validate_quantale(std::move(lat), std::move(star));
}

void bm_well_below_table(benchmark::State& state) {
  const Lattice lat = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(well_below_table(lat));
  }
}
BENCHMARK(bm_well_below_table)->Arg(4)->Arg(8)->Arg(12);

void bm_enumerate_gauge(benchmark::State& state) {
  const Quantale q = meet_chain(static_cast<int>(state.range(0)));
  const Carrier c = validate_carrier({"x", "y"});
  GaugeBase base = discrete_gauge_base(q, c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_gauge(q, base));
  }
}
BENCHMARK(bm_enumerate_gauge)->Arg(2)->Arg(3)->Arg(4);

void bm_t0_oracle(benchmark::State& state) {
  const std::string text =
      slurp(std::string(QVT_EXAMPLES_DIR) + "/t0-not-t1.qvt");
  const Space space = load_space(*parse_document(text).doc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t0_oracle(space, 0).result);
  }
}
BENCHMARK(bm_t0_oracle);

void bm_parse_fixture(benchmark::State& state) {
  const std::string text =
      slurp(std::string(QVT_EXAMPLES_DIR) + "/t0-not-t1.qvt");
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_document(text).ok());
  }
}
BENCHMARK(bm_parse_fixture);

}  // namespace

BENCHMARK_MAIN();
