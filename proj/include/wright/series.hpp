#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of order N stores the coefficients of x^0..x^N. Binary
// operations on series of different orders truncate to the smaller order,
// so no operation ever reads a coefficient that was not computed.

#include <cstddef>
#include <span>
#include <vector>

#include "wright/rational.hpp"

namespace wright {

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients c[0..N]; throws std::invalid_argument if empty.
  explicit TruncatedSeries(std::vector<Rat> coeffs);

  static TruncatedSeries one(std::size_t order);
  /// c * x^power, truncated to order (zero if power > order).
  static TruncatedSeries monomial(const Rat& c, std::size_t power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rat> coeffs() const { return coeffs_; }

  /// Same coefficients cut down to a smaller order.
  TruncatedSeries truncated(std::size_t order) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Rat> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; throws std::domain_error("not invertible") when
/// the constant term is zero.
TruncatedSeries inverse(const TruncatedSeries& s);

/// Formal logarithm of a series with constant term 1, via
/// n L_n = n s_n - sum_{k<n} k L_k s_{n-k}. Throws std::domain_error otherwise.
TruncatedSeries log(const TruncatedSeries& s);

/// Formal exponential of a series with zero constant term.
TruncatedSeries exp(const TruncatedSeries& s);

/// s^e by binary exponentiation; s^0 = 1.
TruncatedSeries int_pow(const TruncatedSeries& s, const BigInt& e);
TruncatedSeries int_pow(const TruncatedSeries& s, unsigned long e);

/// prod_{m=1}^{N} (sum_k a_k x^{km})^{t_m} truncated at order N.
///
/// t is indexed 1..N (t[0] is ignored) and may hold negative integers;
/// a is indexed 0..N with a[0] == 1 (std::invalid_argument otherwise).
/// Both spans must cover index N.
TruncatedSeries euler_product(std::span<const BigInt> t, std::span<const Rat> a, std::size_t order);

}  // namespace wright
