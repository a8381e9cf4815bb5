#include "wright/triples.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "wright/series.hpp"

namespace wright {

namespace {

void require_unit_start(std::span<const Rat> seq, const char* what) {
  if (seq.empty() || seq[0] != 1) throw std::invalid_argument(std::string(what) + " must start with 1");
}

std::optional<Rat> safe_ratio(const Rat& num, const Rat& den) {
  if (den == 0) return std::nullopt;
  return Rat(num / den);
}

}  // namespace

std::vector<Rat> derive_v(std::span<const Rat> T) {
  require_unit_start(T, "T");
  std::vector<Rat> v(T.size());
  for (std::size_t n = 1; n < T.size(); ++n) {
    Rat acc;
    for (std::size_t s = 1; s < n; ++s) acc += Rat(s) * v[s] * T[n - s];
    v[n] = T[n] - acc / n;
  }
  return v;
}

std::vector<Rat> derive_beta(std::span<const Rat> T) {
  require_unit_start(T, "T");
  std::vector<Rat> beta(T.size());
  beta[0] = 1;
  for (std::size_t n = 1; n < T.size(); ++n) {
    Rat acc;
    for (std::size_t s = 0; s < n; ++s) acc += beta[s] * T[n - s];
    beta[n] = -acc;
  }
  return beta;
}

std::vector<Rat> derive_b(std::span<const Rat> a) {
  require_unit_start(a, "a");
  std::vector<Rat> b(a.size());
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rat acc = Rat(n) * a[n];
    for (std::size_t s = 1; s < n; ++s) acc -= b[s] * a[n - s];
    b[n] = acc;
  }
  return b;
}

PrimeInversion invert_to_primes(std::span<const Rat> T, std::span<const Rat> a) {
  require_unit_start(T, "T");
  require_unit_start(a, "a");
  if (a.size() < T.size()) throw std::invalid_argument("a is shorter than T");
  const std::size_t N = T.size() - 1;
  PrimeInversion out;
  out.t.assign(N + 1, Rat(0));
  if (N == 0) return out;
  if (a[1] <= 0) throw std::invalid_argument("a_1 must be positive");
  const auto v = derive_v(T);
  const auto b = derive_b(a.first(N + 1));
  for (std::size_t n = 1; n <= N; ++n) {
    Rat acc = Rat(n) * v[n];
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d == 0) acc -= Rat(d) * out.t[d] * b[n / d];
    }
    out.t[n] = acc / (Rat(n) * b[1]);
    if (!is_integer(out.t[n])) out.integral = false;
  }
  return out;
}

WarlimontTriple::WarlimontTriple(std::vector<Rat> T, std::vector<Rat> t, std::vector<Rat> a)
    : T_(std::move(T)), t_(std::move(t)), a_(std::move(a)) {
  require_unit_start(T_, "T");
  require_unit_start(a_, "a");
  if (t_.size() != T_.size() || a_.size() != T_.size())
    throw std::invalid_argument("triple sequences must share one length");
  if (T_.size() > 1 && a_[1] <= 0) throw std::invalid_argument("a_1 must be positive");
  t_[0] = 0;
  for (const auto& x : t_) {
    if (!is_integer(x)) integral_ = false;
  }
}

WarlimontTriple WarlimontTriple::from_counts(std::vector<Rat> T, std::vector<Rat> a) {
  a.resize(T.size());
  auto inv = invert_to_primes(T, a);
  return WarlimontTriple(std::move(T), std::move(inv.t), std::move(a));
}

WarlimontTriple WarlimontTriple::from_primes(const std::vector<BigInt>& t, std::vector<Rat> a, std::size_t order) {
  if (t.size() <= order || a.size() <= order) throw std::invalid_argument("sequences shorter than order");
  a.resize(order + 1);
  auto T = euler_product(t, a, order);
  std::vector<Rat> ts(t.begin(), t.begin() + order + 1);
  return WarlimontTriple(std::vector<Rat>(T.coeffs().begin(), T.coeffs().end()), std::move(ts), std::move(a));
}

std::vector<BigInt> WarlimontTriple::integer_primes() const {
  if (!integral_) throw std::domain_error("prime counts are not all integers");
  std::vector<BigInt> out;
  out.reserve(t_.size());
  for (const auto& x : t_) out.emplace_back(x.get_num());
  return out;
}

bool WarlimontTriple::admissible() const {
  if (!integral_) return false;
  for (std::size_t i = 0; i < T_.size(); ++i) {
    if (T_[i] < 0 || a_[i] < 0) return false;
  }
  return true;
}

bool WarlimontTriple::satisfies_product_identity() const {
  if (!integral_) return false;
  auto product = euler_product(integer_primes(), a_, order());
  return std::equal(T_.begin(), T_.end(), product.coeffs().begin());
}

IdentityReport check_lemma2_identities(const WarlimontTriple& triple, std::size_t N, std::size_t max_R) {
  if (N > triple.order()) throw std::invalid_argument("check order exceeds triple order");
  const auto T = triple.T();
  const auto t = triple.t();
  const auto v = derive_v(T);
  const auto beta = derive_beta(T);
  const auto b = derive_b(triple.a());
  IdentityReport report;
  auto fail = [&](std::string name, std::size_t n, std::size_t R, Rat lhs, Rat rhs) {
    report.failure = IdentityFailure{std::move(name), n, R, std::move(lhs), std::move(rhs)};
  };

  for (std::size_t n = 1; n <= N && report.ok(); ++n) {
    Rat divisor_sum;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) divisor_sum += Rat(d) * t[d] * b[n / d];
    }
    divisor_sum /= n;
    ++report.checks;
    if (v[n] != divisor_sum) {
      fail("v_n = sum_{d|n} (d/n) t_d b_{n/d}", n, 0, v[n], divisor_sum);
      break;
    }

    Rat beta_rhs;
    for (std::size_t s = 1; s <= n; ++s) beta_rhs -= Rat(s) * v[s] * beta[n - s];
    ++report.checks;
    if (Rat(n) * beta[n] != beta_rhs) {
      fail("n beta_n = -sum s v_s beta_{n-s}", n, 0, Rat(n) * beta[n], beta_rhs);
      break;
    }

    for (std::size_t R = 1; R <= max_R && 2 * R - 1 <= n; ++R) {
      Rat lhs;
      for (std::size_t s = 0; s < R; ++s) lhs += beta[s] * T[n - s];
      Rat tail;
      for (std::size_t r = 0; r < R; ++r) {
        Rat inner;
        for (std::size_t s = R - r; s + R <= n; ++s) inner += Rat(s) * v[s] * T[n - r - s];
        tail += beta[r] * inner;
      }
      Rat rhs = v[n] + tail / n;
      ++report.checks;
      if (lhs != rhs) {
        fail("sum_{s<R} beta_s T_{n-s} = v_n + tail", n, R, lhs, rhs);
        break;
      }
    }
  }
  return report;
}

IdentityReport check_lemma3(const WarlimontTriple& triple, std::size_t N) {
  if (N > triple.order()) throw std::invalid_argument("check order exceeds triple order");
  const auto T = triple.T();
  const auto t = triple.t();
  for (std::size_t m = 1; m <= N; ++m) {
    if (t[m] < 0) throw std::domain_error("lemma 3 inequality needs non-negative t");
  }
  const Rat a1 = triple.order() > 0 ? triple.a()[1] : Rat(1);
  IdentityReport report;
  for (std::size_t n = 1; n <= N; ++n) {
    Rat lhs;
    for (std::size_t s = 0; 2 * s < n; ++s) lhs += T[s] * t[n - s];
    lhs *= a1;
    ++report.checks;
    if (lhs > T[n]) {
      report.failure = IdentityFailure{"a_1 sum_{s<n/2} T_s t_{n-s} <= T_n", n, 0, lhs, T[n]};
      break;
    }
  }
  return report;
}

IdentityReport check_beta_convolution(std::span<const Rat> T, std::size_t N) {
  if (N >= T.size()) throw std::invalid_argument("check order exceeds sequence length");
  const auto beta = derive_beta(T);
  IdentityReport report;
  for (std::size_t n = 0; n <= N; ++n) {
    Rat acc;
    for (std::size_t s = 0; s <= n; ++s) acc += beta[s] * T[n - s];
    const Rat expected = n == 0 ? 1 : 0;
    ++report.checks;
    if (acc != expected) {
      report.failure = IdentityFailure{"beta * T = delta", n, 0, acc, expected};
      break;
    }
  }
  return report;
}

RatioTable lemma4_ratios(const WarlimontTriple& triple, std::size_t R, std::size_t N, Lemma4Scale scale) {
  if (N > triple.order()) throw std::invalid_argument("table order exceeds triple order");
  const auto v = derive_v(triple.T());
  const Rat a1 = triple.a()[1];
  const auto denom = scale == Lemma4Scale::Counts ? triple.T() : triple.t();
  RatioTable table;
  for (std::size_t n = R + 1; n <= N; ++n) {
    Rat diff = abs(v[n] - a1 * triple.t()[n]);
    table.push_back({n, safe_ratio(diff, denom[n - R])});
  }
  return table;
}

AxiomTables check_axiom_WR(std::span<const Rat> G, std::size_t R, std::size_t N) {
  if (N >= G.size()) throw std::invalid_argument("table order exceeds sequence length");
  if (R == 0) throw std::invalid_argument("R must be positive");
  AxiomTables out;
  for (std::size_t n = R; n <= N; ++n) {
    Rat acc;
    for (std::size_t s = R; s + R <= n; ++s) acc += G[s] * G[n - s];
    out.convolution.push_back({n, safe_ratio(acc, G[n - R])});
  }
  for (std::size_t n = 1; n <= N; ++n) out.successive.push_back({n, safe_ratio(G[n - 1], G[n])});
  return out;
}

GrowthConditionTables growth_condition_tables(const WarlimontTriple& triple, std::size_t R, std::size_t N) {
  if (N > triple.order()) throw std::invalid_argument("table order exceeds triple order");
  if (R == 0) throw std::invalid_argument("R must be positive");
  const auto T = triple.T();
  const auto t = triple.t();
  const Rat a1 = triple.a()[1];
  const auto beta = derive_beta(T);
  GrowthConditionTables out;
  for (std::size_t n = R; n <= N; ++n) {
    Rat tt, pp, from_counts, from_primes;
    for (std::size_t s = R; s + R <= n; ++s) {
      tt += T[s] * T[n - s];
      pp += t[s] * t[n - s];
    }
    for (std::size_t s = 0; s < R; ++s) {
      from_counts += beta[s] * T[n - s];
      from_primes += T[s] * t[n - s];
    }
    out.counts_convolution.push_back({n, safe_ratio(tt, T[n - R])});
    out.primes_from_counts.push_back({n, safe_ratio(a1 * t[n] - from_counts, T[n - R])});
    out.counts_from_primes.push_back({n, safe_ratio(T[n] - a1 * from_primes, t[n - R])});
    out.primes_convolution.push_back({n, safe_ratio(pp, t[n - R])});
  }
  for (std::size_t n = 1; n <= N; ++n) {
    out.counts_successive.push_back({n, safe_ratio(T[n - 1], T[n])});
    out.primes_successive.push_back({n, safe_ratio(t[n - 1], t[n])});
  }
  return out;
}

}  // namespace wright
