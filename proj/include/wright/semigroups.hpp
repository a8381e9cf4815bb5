#pragma once

// Concrete additive arithmetical semigroups: exact element counts G_n,
// prime counts G_n^+ (by inversion of the Euler product with a = 1), and
// the asymptotic metadata the expansion pipeline needs.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wright/bigfloat.hpp"
#include "wright/polyasym.hpp"
#include "wright/rational.hpp"

namespace wright {

/// Unlabeled simple graphs on n vertices, by Burnside over cycle types.
BigInt graph_count(std::size_t n);

/// Unlabeled graphs on n vertices with an even number of edges.
BigInt even_edge_graph_count(std::size_t n);

/// Nonzero polynomials up to scalars in F_q[x_1..x_k] of total degree n:
/// (q^C(n+k,k) - q^C(n-1+k,k)) / (q-1), and 1 for n = 0.
/// Throws std::invalid_argument unless q is a prime power and k >= 1.
BigInt fq_poly_count(const BigInt& q, unsigned k, std::size_t n);

bool is_prime_power(const BigInt& q);

/// phi_0..phi_{s_max} with
///   G_n n! / 2^C(n,2) = sum_s phi_s(n) 2^{-s n},
/// collected from the cycle types whose non-fixed part has
/// sum (length - 1) = s. The sum is exact once s_max >= n - 1.
std::vector<Poly> derive_phi(std::size_t s_max);

/// psi_0..psi_{R-1} (psi_0 = 0) in base 2, from
///   G_{n-1}/G_n = 2n 2^{-n} * (sum 2^s phi_s(n-1) 2^{-sn}) / (sum phi_s(n) 2^{-sn}).
/// Missing phi entries are treated as zero.
PolyExpansion psi_from_phi(std::span<const Poly> phi, std::size_t R);

/// Ratio expansion of G_{n-1}/G_n for F_q[x, y]: psi_1 = 1/q,
/// psi_s = q^{-s} (1 - q) for s >= 2. Throws std::domain_error when k != 2.
PolyExpansion fq_ratio_expansion(const BigInt& q, unsigned k, std::size_t R);

/// The expansion base q = radicand^(1/root). root == 1 means q is an
/// exact rational.
struct ExpansionBase {
  Rat radicand;
  unsigned long root = 1;
  bool exact() const { return root == 1; }
};

/// log G_n = alpha n^{a+1} + beta n log n + gamma n + O(n^b).
struct GrowthProfile {
  BigFloat alpha;
  unsigned a = 1;
  BigFloat beta;
  BigFloat gamma;
};

struct ModelInfo {
  std::string name;
  std::map<std::string, std::string> params;
  ExpansionBase base;
  /// Exponent a of the dominant growth term; the polynomial-coefficient
  /// expansion exists only for a = 1.
  unsigned growth_exponent = 1;
  bool wright = false;
  /// deg(psi_s) <= d1 s - d2.
  int d1 = 0;
  int d2 = 0;
  std::optional<GrowthProfile> profile;
};

class SemigroupModel {
 public:
  using CountFn = std::function<BigInt(std::size_t)>;
  using RatioFn = std::function<PolyExpansion(std::size_t)>;
  using PhiFn = std::function<std::vector<Poly>(std::size_t)>;

  SemigroupModel(ModelInfo info, CountFn count, RatioFn ratio = {}, PhiFn phi = {});

  const ModelInfo& info() const { return info_; }
  const std::string& name() const { return info_.name; }

  /// G_n; memoized, safe to call concurrently.
  BigInt count(std::size_t n) const;
  /// G_0..G_N as rationals.
  std::vector<Rat> counts(std::size_t N) const;
  /// G^+_0..G^+_N (index 0 is zero); throws std::domain_error if the
  /// inversion is not integral.
  std::vector<BigInt> primes(std::size_t N) const;

  bool has_ratio_expansion() const { return static_cast<bool>(ratio_); }
  /// psi_0..psi_{R-1}; throws std::domain_error when the model has none.
  PolyExpansion ratio_expansion(std::size_t R) const;

  bool has_phi() const { return static_cast<bool>(phi_); }
  std::vector<Poly> phi(std::size_t s_max) const;

 private:
  struct Cache;
  ModelInfo info_;
  CountFn count_;
  RatioFn ratio_;
  PhiFn phi_;
  std::shared_ptr<Cache> cache_;
};

SemigroupModel make_graphs();
SemigroupModel make_even_graphs();
SemigroupModel make_fq_poly(const BigInt& q, unsigned k);
/// Explicit count sequence (G_0 must be 1); no asymptotic metadata.
SemigroupModel make_custom_semigroup(std::string name, std::vector<BigInt> counts);

struct SemigroupSpec {
  std::string name;  // "graphs", "even-graphs", "fq-poly", "custom"
  BigInt q = 2;
  unsigned k = 2;
  std::vector<BigInt> counts;  // for "custom"
};

/// Throws std::invalid_argument on an unknown name.
SemigroupModel make_semigroup(const SemigroupSpec& spec);

struct ProfileRow {
  std::size_t n = 0;
  BigFloat log_count;
  BigFloat residual;
};

/// log G_n and log G_n - (alpha n^{a+1} + beta n log n + gamma n) for
/// 1 <= n <= N. Throws std::domain_error if the model declares no profile.
std::vector<ProfileRow> wright_log_profile(const SemigroupModel& model, std::size_t N);

}  // namespace wright
