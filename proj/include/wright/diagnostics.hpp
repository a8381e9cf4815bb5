#pragma once

// Ratio tables and the boundedness criteria used for every O(.) claim.
//
// Desk-scale data cannot prove an asymptotic bound, so each claim is turned
// into a table of ratios r_n = lhs_n / scale_n and judged on the upper half
// of the tested range.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wright/rational.hpp"

namespace wright {

struct RatioRow {
  std::size_t n = 0;
  /// Empty when the denominator vanished and the entry was skipped.
  std::optional<Rat> ratio;
};

using RatioTable = std::vector<RatioRow>;

inline const Rat kBoundFactor = Rat(20);

enum class BoundCriterion {
  /// max|r| / min|r| < factor over the upper half: r settles at a nonzero scale.
  Stable,
  /// max|r| over the upper half <= factor * max|r| over the lower half: r does not grow.
  NonGrowing,
};

struct BoundVerdict {
  bool bounded = false;
  /// Upper-half extremes of |r| (zero when the half is empty).
  Rat max_abs;
  Rat min_abs;
  std::string detail;
};

BoundVerdict judge_bounded(const RatioTable& table, BoundCriterion criterion = BoundCriterion::Stable,
                           const Rat& factor = kBoundFactor);

/// True when |r_n| is strictly decreasing across the upper half of the table.
bool decreasing_upper_half(const RatioTable& table);

}  // namespace wright
