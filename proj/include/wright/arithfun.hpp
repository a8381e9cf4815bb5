#pragma once

// Warlimont functions: non-negative, multiplicative, prime-independent
// functions F, determined by their values F^+_k on k-th prime powers.
// Totals F_n = sum over degree-n elements come from the Euler product
//   sum F_n x^n = prod_m (sum_k F^+_k x^{km})^{G^+_m}.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wright/rational.hpp"
#include "wright/semigroups.hpp"

namespace wright {

class WarlimontFn {
 public:
  using Values = std::function<Rat(std::size_t)>;

  /// values(k) for k >= 1; F^+_0 = 1 is implied. Throws
  /// std::invalid_argument if F^+_1 <= 0.
  WarlimontFn(std::string name, Values values);

  const std::string& name() const { return name_; }
  /// F^+_k, with F^+_0 = 1. Throws std::domain_error on a negative value.
  Rat prime_power_value(std::size_t k) const;
  const Rat& f1plus() const { return f1plus_; }
  /// F^+_0..F^+_N, the a-sequence of the triple (F_n, G^+_n, F^+_n).
  std::vector<Rat> values(std::size_t N) const;

 private:
  std::string name_;
  Values values_;
  Rat f1plus_;
};

/// F = 1 on every element.
WarlimontFn constant_one();
/// Generalized divisor function: (d_k)^+_n = C(n+k-1, k-1). Requires k >= 2.
WarlimontFn dk_values(unsigned k);
/// Unitary divisor function: (d_*)^+_n = 2.
WarlimontFn dstar_values();
/// Prime divisor function: B^+_n = n.
WarlimontFn bigB_values();
/// Explicit F^+_1..F^+_L; asking for k > L throws std::out_of_range.
WarlimontFn custom_values(std::string name, std::vector<Rat> values);

/// Pointwise power: (F^m)^+_n = (F^+_n)^m. Requires m >= 1.
WarlimontFn fn_power(const WarlimontFn& F, unsigned m);

/// "one", "d<k>" (d2, d3, ...), "dk" (with k), "dstar", "bigB", or "custom" (with values).
WarlimontFn make_function(const std::string& name, unsigned k = 2, const std::vector<Rat>& custom = {});

/// F_0..F_N from the prime counts G^+_0..G^+_N.
std::vector<Rat> fn_totals(const WarlimontFn& F, std::span<const BigInt> primes, std::size_t N);

/// F_n by explicit enumeration of prime-exponent multisets, with no power
/// series involved. Limited to n <= 10 (std::invalid_argument beyond).
Rat oracle_prime_multiset(const WarlimontFn& F, std::span<const BigInt> primes, std::size_t n);

struct MomentTable {
  std::string function;
  unsigned M = 1;
  /// mu_{F,M}(0..N).
  std::vector<Rat> mu;
};

/// mu_{F,M}(n) = (1/G_n) (-1)^M sum_{m=0}^{M} (-1)^m C(M,m) (F^m)_n / (F^+_1)^m
/// for 0 <= n <= N. `parallel` computes the totals of each F^m concurrently.
MomentTable moment_table(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t N,
                         bool parallel = false);

Rat exact_moment(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t n);

}  // namespace wright
