#pragma once

// Polynomials in n with rational coefficients, and asymptotic expansions
//   sum_{s=0}^{R-1} p_s(n) q^{-s n}
// treated as truncated power series in y = q^{-n} whose coefficients are
// polynomials in n.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wright/rational.hpp"

namespace wright {

/// Polynomial in n, stored without trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of n^i (zero past the degree).
  Rat coeff(std::size_t i) const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& a);
  Poly& operator+=(const Poly& other);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Horner evaluation.
Rat poly_eval(const Poly& p, const Rat& n);

/// p(n - c), expanded in powers of n.
Poly poly_shift(const Poly& p, long c);

/// sum_s p_s(n) base^{-s n} for s = 0..order-1.
class PolyExpansion {
 public:
  /// base must exceed 1 and terms must be non-empty.
  PolyExpansion(Rat base, std::vector<Poly> terms);

  /// The expansion 1 (p_0 = 1, every other term zero) with `order` terms.
  static PolyExpansion one(const Rat& base, std::size_t order);

  const Rat& base() const { return base_; }
  /// Number of stored terms R.
  std::size_t order() const { return terms_.size(); }
  const Poly& term(std::size_t s) const { return terms_.at(s); }
  std::span<const Poly> terms() const { return terms_; }

  PolyExpansion truncated(std::size_t order) const;

  /// Exact value of the truncated sum at integer n.
  Rat evaluate(long n) const;

  friend bool operator==(const PolyExpansion& a, const PolyExpansion& b) = default;

 private:
  Rat base_;
  std::vector<Poly> terms_;
};

PolyExpansion expansion_add(const PolyExpansion& a, const PolyExpansion& b);
PolyExpansion expansion_scale(const Rat& c, const PolyExpansion& e);

/// Term s of the product is sum_{u+v=s} p_u r_v; order is the smaller one.
/// Throws std::invalid_argument on a base mismatch.
PolyExpansion expansion_mul(const PolyExpansion& a, const PolyExpansion& b);

/// Substitutes n -> n - c: term s becomes poly_shift(p_s, c) * base^{c s}.
PolyExpansion expansion_shift_substitute(const PolyExpansion& e, long c);

/// 1/e as sum_r (1 - e)^r; requires p_0 = 1 (std::domain_error otherwise).
PolyExpansion expansion_geometric_inverse(const PolyExpansion& e);

}  // namespace wright
