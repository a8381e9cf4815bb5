#pragma once

// 200-bit binary floating point. Used only for diagnostics that involve
// logarithms or irrational bases; everything else stays exact.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wright/rational.hpp"

namespace wright {

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

inline BigFloat to_bigfloat(const BigInt& z) { return BigFloat(z.get_str()); }

inline BigFloat to_bigfloat(const Rat& r) {
  return to_bigfloat(BigInt(r.get_num())) / to_bigfloat(BigInt(r.get_den()));
}

}  // namespace wright
