#pragma once

#include <cstdint>

namespace qvt {

/// Size guards for the exhaustive algorithms.  Every guard is checked before
/// the corresponding sweep starts; exceeding one raises errc::size_guard
/// instead of silently truncating the computation.
struct Limits {
  int lattice_exhaustive_max = 16;          // 2^|L| subset sweeps
  int directed_subset_max = 12;             // 2^|H| subsets of a base
  std::int64_t metric_enum_max = 2'000'000;  // |L|^(n^2-n) metric candidates
  std::int64_t func_enum_max = 1'000'000;    // |L|^|X| function candidates
  int product_points_max = 64;               // carrier size of finite products
  std::int64_t initial_selection_max = 1'000'000;  // raw initial-base selections
  int initial_base_max = 10'000;             // initial base members after dedup
  int distance_points_max = 12;              // 4^n union-axiom sweep

  static const Limits& defaults();
};

}  // namespace qvt
