#pragma once

// Warlimont triples (T, t, a): sequences tied by the Euler-product identity
//   sum_n T_n x^n = prod_{m>=1} (sum_k a_k x^{km})^{t_m},
// with T_0 = a_0 = 1, a_1 > 0 and integer t. This module holds the derived
// recursions v, beta, b, the exact identities linking them, the inversion
// T -> t, and ratio diagnostics for the growth conditions.
//
// Sequences are indexed from 0. For t (and v, b) index 0 is unused and
// stored as zero.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wright/diagnostics.hpp"
#include "wright/rational.hpp"

namespace wright {

/// v_n = T_n - sum_{s=1}^{n-1} (s/n) v_s T_{n-s}, i.e. log(sum T_n x^n) = sum v_n x^n.
std::vector<Rat> derive_v(std::span<const Rat> T);

/// beta_0 = 1, beta_n = -sum_{s<n} beta_s T_{n-s}: coefficients of 1 / sum T_n x^n.
std::vector<Rat> derive_beta(std::span<const Rat> T);

/// b_n = n a_n - sum_{s=1}^{n-1} b_s a_{n-s}, i.e. log(sum a_n x^n) = sum (b_s/s) x^s.
std::vector<Rat> derive_b(std::span<const Rat> a);

struct PrimeInversion {
  std::vector<Rat> t;
  /// False when some t_n is not an integer (the input is then no triple).
  bool integral = true;
};

/// The unique t with euler_product(t, a) = T, solved degree by degree from
/// n v_n = sum_{d|n} d t_d b_{n/d}. Requires T_0 = a_0 = 1, a_1 > 0 and
/// a.size() >= T.size().
PrimeInversion invert_to_primes(std::span<const Rat> T, std::span<const Rat> a);

class WarlimontTriple {
 public:
  /// Checks T_0 = a_0 = 1, a_1 > 0 and matching lengths (std::invalid_argument).
  WarlimontTriple(std::vector<Rat> T, std::vector<Rat> t, std::vector<Rat> a);

  /// t recovered from T by inversion.
  static WarlimontTriple from_counts(std::vector<Rat> T, std::vector<Rat> a);
  /// T computed from t by the Euler product, up to `order`.
  static WarlimontTriple from_primes(const std::vector<BigInt>& t, std::vector<Rat> a, std::size_t order);

  std::size_t order() const { return T_.size() - 1; }
  std::span<const Rat> T() const { return T_; }
  std::span<const Rat> t() const { return t_; }
  std::span<const Rat> a() const { return a_; }

  bool integral_primes() const { return integral_; }
  /// t as integers; throws std::domain_error if some t_n is not integral.
  std::vector<BigInt> integer_primes() const;

  /// Integral t, non-negative T and a, and only finitely many negative t
  /// (trivially true on a finite prefix).
  bool admissible() const;
  /// The Euler-product identity holds exactly up to order().
  bool satisfies_product_identity() const;

 private:
  std::vector<Rat> T_;
  std::vector<Rat> t_;
  std::vector<Rat> a_;
  bool integral_ = true;
};

struct IdentityFailure {
  std::string identity;
  std::size_t n = 0;
  std::size_t R = 0;
  Rat lhs;
  Rat rhs;
};

struct IdentityReport {
  std::size_t checks = 0;
  std::optional<IdentityFailure> failure;
  bool ok() const { return !failure; }
};

/// Exact check of the three identities tying v, beta, b, t and T, for
/// 1 <= n <= N:
///   1) v_n = sum_{d|n} (d/n) t_d b_{n/d}   (all divisors, d = 1 included)
///   2) n beta_n = -sum_{s=1}^{n} s v_s beta_{n-s}
///   3) sum_{s<R} beta_s T_{n-s} = v_n + (1/n) sum_{r<R} beta_r sum_{s=R-r}^{n-R} s v_s T_{n-r-s}
/// Identity 3 is checked for 1 <= R <= max_R and n >= 2R - 1; for
/// R <= n < 2R - 1 its inner sums are truncated and it does not hold.
IdentityReport check_lemma2_identities(const WarlimontTriple& triple, std::size_t N, std::size_t max_R = 6);

/// a_1 sum_{0 <= s < n/2} T_s t_{n-s} <= T_n for 1 <= n <= N. The s = n/2
/// term for even n is excluded; with it the bound already fails for d_2 on
/// graphs at n = 2.
/// Throws std::domain_error if some t_m is negative.
IdentityReport check_lemma3(const WarlimontTriple& triple, std::size_t N);

/// beta * T = delta (exact convolution check) for n <= N.
IdentityReport check_beta_convolution(std::span<const Rat> T, std::size_t N);

enum class Lemma4Scale { Counts, Primes };

/// |v_n - a_1 t_n| / T_{n-R} (or / t_{n-R}) for R < n <= N.
RatioTable lemma4_ratios(const WarlimontTriple& triple, std::size_t R, std::size_t N,
                         Lemma4Scale scale = Lemma4Scale::Counts);

struct AxiomTables {
  /// sum_{s=R}^{n-R} G_s G_{n-s} / G_{n-R}, R <= n <= N (zero for n < 2R).
  RatioTable convolution;
  /// G_{n-1} / G_n, 1 <= n <= N.
  RatioTable successive;
};

AxiomTables check_axiom_WR(std::span<const Rat> G, std::size_t R, std::size_t N);

/// The four equivalent growth conditions, as ratio tables over R <= n <= N:
///   1) sum_{s=R}^{n-R} T_s T_{n-s} / T_{n-R}
///   2) (a_1 t_n - sum_{s<R} beta_s T_{n-s}) / T_{n-R}
///   3) (T_n - a_1 sum_{s<R} T_s t_{n-s}) / t_{n-R}
///   4) sum_{s=R}^{n-R} t_s t_{n-s} / t_{n-R}
/// plus the successive quotients T_{n-1}/T_n and t_{n-1}/t_n.
struct GrowthConditionTables {
  RatioTable counts_convolution;
  RatioTable primes_from_counts;
  RatioTable counts_from_primes;
  RatioTable primes_convolution;
  RatioTable counts_successive;
  RatioTable primes_successive;
};

GrowthConditionTables growth_condition_tables(const WarlimontTriple& triple, std::size_t R, std::size_t N);

}  // namespace wright
