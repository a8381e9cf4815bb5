#pragma once

// Moment expansions for Warlimont functions on Wright semigroups.
//
//   mu_{F,M}(n) = sum_{s>=1} xi_s G_{n-s}/G_n              (constants xi_s)
//   G_{n-t}/G_n = sum_{s>=t} nu_{s,t}(n) q^{-sn}           (from the ratio psi)
//   mu_{F,M}(n) = sum_{s>=1} tau_s(n) q^{-sn},  tau_s = sum_{t<=s} xi_t nu_{s,t}

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wright/arithfun.hpp"
#include "wright/bigfloat.hpp"
#include "wright/diagnostics.hpp"
#include "wright/polyasym.hpp"
#include "wright/semigroups.hpp"

namespace wright {

/// How (F^m)_j enters the xi sum. Unnormalized (raw totals) is the reading
/// that reproduces the published tau tables; Normalized divides each total
/// by (F^+_1)^m and is kept for comparison only.
enum class TotalsReading { Unnormalized, Normalized };

struct XiVector {
  unsigned M = 1;
  /// xi_0..xi_{R-1}; xi_0 is always 0.
  std::vector<Rat> xi;
};

/// xi_s = (-1)^M sum_{m=0}^{M} (-1)^m C(M,m) sum_{r=0}^{s} beta_r (F^m)_{s-r},
/// with beta the inverse of the count series and F^0 the constant function.
XiVector compute_xi(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                    TotalsReading reading = TotalsReading::Unnormalized);

/// nu_{s,t} for 1 <= t <= s <= R-1.
class NuTable {
 public:
  NuTable() = default;
  NuTable(Rat base, std::size_t R) : base_(std::move(base)), R_(R) {}

  const Rat& base() const { return base_; }
  std::size_t order() const { return R_; }
  /// Throws std::out_of_range outside 1 <= t <= s < R.
  const Poly& at(std::size_t s, std::size_t t) const;
  void set(std::size_t s, std::size_t t, Poly p);

  friend bool operator==(const NuTable& a, const NuTable& b) = default;

 private:
  Rat base_;
  std::size_t R_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Poly> entries_;
};

/// Sum over compositions i_1 + ... + i_t = s of
///   psi_{i_1}(n) psi_{i_2}(n-1) ... psi_{i_t}(n-t+1) q^{i_2 + 2 i_3 + ... + (t-1) i_t}.
NuTable compute_nu_direct(const PolyExpansion& psi, std::size_t R);

/// Coefficients of the t-fold product of the ratio expansion with its
/// shifts n -> n-1, ..., n-t+1.
NuTable compute_nu_iterated(const PolyExpansion& psi, std::size_t R);

/// Both routes; throws std::logic_error if they disagree.
NuTable compute_nu(const PolyExpansion& psi, std::size_t R);

struct TauExpansion {
  Rat base;
  /// tau_0..tau_{R-1}; tau_0 is the zero polynomial.
  std::vector<Poly> tau;
  int d1 = 0;
  int d2 = 0;

  /// sum_{s<R} tau_s(n) base^{-sn}.
  Rat evaluate(long n) const;
};

/// tau_s = sum_{t=1}^{s} xi_t nu_{s,t}. Throws std::logic_error if some
/// tau_s exceeds degree d1 s - d2.
TauExpansion compute_tau(const XiVector& xi, const NuTable& nu, int d1, int d2);

struct MomentExpansion {
  PolyExpansion psi;
  NuTable nu;
  XiVector xi;
  TauExpansion tau;
};

/// The whole pipeline for a model with a polynomial ratio expansion.
/// Throws std::domain_error when the model's growth exponent a is not 1.
MomentExpansion expand_moment(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                              TotalsReading reading = TotalsReading::Unnormalized);

struct LambdaValue {
  /// Set when base^{s n^a} is rational.
  std::optional<Rat> exact;
  BigFloat approx;
};

/// lambda_s(n) = xi_s q^{s n^a} G_{n-s} / G_n, for n >= s >= 1.
LambdaValue lambda_pointwise(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t s,
                             std::size_t n);

struct ResidualRow {
  std::size_t n = 0;
  Rat moment;
  /// mu(n) - sum_{s<R} tau_s(n) q^{-sn}
  Rat residual;
  /// residual q^{Rn} / n^{d1 R - d2}
  Rat ratio;
};

struct ResidualReport {
  unsigned M = 1;
  std::size_t R = 1;
  std::vector<ResidualRow> rows;
  BoundVerdict verdict;
};

/// Exact residuals of the truncated tau expansion on [n_lo, n_hi], judged
/// with the Stable bounded-ratio criterion.
ResidualReport verify_expansion(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                                std::size_t n_lo, std::size_t n_hi, bool parallel = false);

/// (sum_{deg g = n} (F~(g) - 1)^M - sum_{s<R} xi_s G_{n-s}) / G_{n-R}
/// for R <= n <= N.
RatioTable central_sum_residuals(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t R,
                                 std::size_t N);

}  // namespace wright
