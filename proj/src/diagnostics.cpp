#include "wright/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace wright {

namespace {

std::vector<Rat> present_abs(const RatioTable& table, std::size_t from, std::size_t to) {
  std::vector<Rat> out;
  for (std::size_t i = from; i < to; ++i) {
    if (table[i].ratio) out.push_back(abs(*table[i].ratio));
  }
  return out;
}

std::string approx(const Rat& x) {
  std::ostringstream out;
  out.precision(6);
  out << x.get_d();
  return out.str();
}

std::string span_text(const Rat& lo, const Rat& hi) {
  return "upper-half |r| in [" + approx(lo) + ", " + approx(hi) + "]";
}

}  // namespace

BoundVerdict judge_bounded(const RatioTable& table, BoundCriterion criterion, const Rat& factor) {
  BoundVerdict v;
  const std::size_t half = table.size() / 2;
  auto upper = present_abs(table, half, table.size());
  if (upper.empty()) {
    v.detail = "no usable ratios in the upper half";
    return v;
  }
  v.max_abs = *std::max_element(upper.begin(), upper.end());
  v.min_abs = *std::min_element(upper.begin(), upper.end());
  if (criterion == BoundCriterion::Stable) {
    v.bounded = v.min_abs > 0 && v.max_abs < factor * v.min_abs;
    v.detail = span_text(v.min_abs, v.max_abs);
    if (!v.bounded) v.detail += ", max/min spread exceeds " + to_string(factor);
  } else {
    auto lower = present_abs(table, 0, half);
    if (lower.empty()) {
      v.detail = "no usable ratios in the lower half";
      return v;
    }
    const Rat lower_max = *std::max_element(lower.begin(), lower.end());
    v.bounded = v.max_abs <= factor * lower_max;
    v.detail = span_text(v.min_abs, v.max_abs) + ", lower-half max " + approx(lower_max);
    if (!v.bounded) v.detail += ", grew past " + to_string(factor) + "x the lower half";
  }
  return v;
}

bool decreasing_upper_half(const RatioTable& table) {
  auto upper = present_abs(table, table.size() / 2, table.size());
  if (upper.size() < 2) return false;
  for (std::size_t i = 1; i < upper.size(); ++i) {
    if (!(upper[i] < upper[i - 1])) return false;
  }
  return true;
}

}  // namespace wright
