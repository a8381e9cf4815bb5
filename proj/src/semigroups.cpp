#include "wright/semigroups.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "wright/triples.hpp"

namespace wright {

namespace {

// A cycle type as (length, multiplicity) pairs with distinct lengths.
using CycleType = std::vector<std::pair<std::size_t, std::size_t>>;

template <class Visit>
void for_each_partition(std::size_t n, std::size_t min_part, Visit&& visit) {
  CycleType parts;
  // Parts are generated in decreasing order of length.
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      visit(static_cast<const CycleType&>(parts));
      return;
    }
    for (std::size_t len = std::min(remaining, max_part); len >= min_part && len >= 1; --len) {
      for (std::size_t mult = 1; mult * len <= remaining; ++mult) {
        parts.emplace_back(len, mult);
        self(self, remaining - mult * len, len - 1);
        parts.pop_back();
      }
    }
  };
  rec(rec, n, n);
}

// Centralizer order z = prod len^mult * mult!.
BigInt centralizer(const CycleType& type) {
  BigInt z = 1;
  for (auto [len, mult] : type) z *= pow(BigInt(len), mult) * factorial(mult);
  return z;
}

// Orbits of the permutation on unordered vertex pairs, as (orbit length, count).
std::vector<std::pair<std::size_t, std::size_t>> edge_orbits(const CycleType& type) {
  std::vector<std::pair<std::size_t, std::size_t>> orbits;
  auto push = [&](std::size_t length, std::size_t count) {
    if (count > 0) orbits.emplace_back(length, count);
  };
  for (std::size_t i = 0; i < type.size(); ++i) {
    const auto [len, mult] = type[i];
    if (len % 2 == 1) {
      push(len, mult * ((len - 1) / 2));
    } else {
      push(len, mult * ((len - 2) / 2));
      push(len / 2, mult);
    }
    push(len, len * (mult * (mult - 1) / 2));
    for (std::size_t j = i + 1; j < type.size(); ++j) {
      const auto [len2, mult2] = type[j];
      const std::size_t g = std::gcd(len, len2);
      push(len / g * len2, mult * mult2 * g);
    }
  }
  return orbits;
}

std::size_t orbit_total(const std::vector<std::pair<std::size_t, std::size_t>>& orbits) {
  std::size_t c = 0;
  for (auto [len, count] : orbits) c += count;
  return c;
}

Poly falling_factorial(std::size_t m) {
  Poly p = Poly::constant(1);
  for (std::size_t i = 0; i < m; ++i) p = p * Poly{Rat(-static_cast<long>(i)), Rat(1)};
  return p;
}

BigInt require_integral(const Rat& r, const char* what) {
  if (!is_integer(r)) throw std::logic_error(std::string(what) + " produced a non-integer");
  return BigInt(r.get_num());
}

unsigned long to_ulong(const BigInt& z) {
  if (!z.fits_ulong_p()) throw std::overflow_error("exponent too large");
  return z.get_ui();
}

}  // namespace

BigInt graph_count(std::size_t n) {
  Rat total;
  for_each_partition(n, 1, [&](const CycleType& type) {
    total += make_rat(pow(BigInt(2), orbit_total(edge_orbits(type))), centralizer(type));
  });
  if (n == 0) return 1;
  return require_integral(total, "graph_count");
}

BigInt even_edge_graph_count(std::size_t n) {
  if (n == 0) return 1;
  Rat all, signed_sum;
  for_each_partition(n, 1, [&](const CycleType& type) {
    const auto orbits = edge_orbits(type);
    const Rat fixed = make_rat(pow(BigInt(2), orbit_total(orbits)), centralizer(type));
    all += fixed;
    // Each orbit of length l contributes (1 + (-1)^l), which kills odd orbits.
    bool all_even = true;
    for (auto [len, count] : orbits) {
      if (len % 2 == 1) all_even = false;
    }
    if (all_even) signed_sum += fixed;
  });
  Rat even = (all + signed_sum) / 2;
  return require_integral(even, "even_edge_graph_count");
}

bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (unsigned long e = 1; e <= bits; ++e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 30) > 0)
      return true;
  }
  return false;
}

BigInt fq_poly_count(const BigInt& q, unsigned k, std::size_t n) {
  if (!is_prime_power(q)) throw std::invalid_argument("field size must be a prime power, got " + to_string(q));
  if (k < 1) throw std::invalid_argument("need at least one variable");
  if (n == 0) return 1;
  const auto hi = to_ulong(binomial(BigInt(n + k), k));
  const auto lo = to_ulong(binomial(BigInt(n - 1 + k), k));
  BigInt diff = pow(q, hi) - pow(q, lo);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), diff.get_mpz_t(), BigInt(q - 1).get_mpz_t());
  return out;
}

std::vector<Poly> derive_phi(std::size_t s_max) {
  std::vector<Poly> phi(s_max + 1);
  // Non-fixed support m with k cycles sits at level s = m - k <= m / 2.
  for (std::size_t m = 0; m <= 2 * s_max; ++m) {
    const Poly falling = falling_factorial(m);
    for_each_partition(m, 2, [&](const CycleType& type) {
      std::size_t cycles = 0;
      for (auto [len, mult] : type) cycles += mult;
      const std::size_t s = m - cycles;
      if (s > s_max) return;
      const long exponent = static_cast<long>(orbit_total(edge_orbits(type))) +
                            static_cast<long>(m * (m + 1) / 2) - static_cast<long>(m * cycles);
      const Rat weight = pow(Rat(2), exponent) / Rat(centralizer(type));
      phi[s] += weight * falling;
    });
  }
  return phi;
}

PolyExpansion psi_from_phi(std::span<const Poly> phi, std::size_t R) {
  if (R == 0) throw std::invalid_argument("R must be positive");
  const Rat two = 2;
  std::vector<Poly> sum_terms(R);
  for (std::size_t s = 0; s < R && s < phi.size(); ++s) sum_terms[s] = phi[s];
  const PolyExpansion sum(two, std::move(sum_terms));
  std::vector<Poly> pre_terms(R);
  if (R > 1) pre_terms[1] = Poly::monomial(2, 1);
  const PolyExpansion prefactor(two, std::move(pre_terms));
  return expansion_mul(expansion_mul(prefactor, expansion_shift_substitute(sum, 1)),
                       expansion_geometric_inverse(sum));
}

PolyExpansion fq_ratio_expansion(const BigInt& q, unsigned k, std::size_t R) {
  if (k != 2) throw std::domain_error("no polynomial ratio expansion for k != 2 variables");
  if (R == 0) throw std::invalid_argument("R must be positive");
  const Rat base(q);
  std::vector<Poly> terms(R);
  if (R > 1) terms[1] = Poly::constant(pow(base, -1));
  for (std::size_t s = 2; s < R; ++s) terms[s] = Poly::constant(pow(base, -static_cast<long>(s)) * (1 - base));
  return PolyExpansion(base, std::move(terms));
}

struct SemigroupModel::Cache {
  std::mutex mutex;
  std::vector<BigInt> counts;
  std::vector<BigInt> primes;
};

SemigroupModel::SemigroupModel(ModelInfo info, CountFn count, RatioFn ratio, PhiFn phi)
    : info_(std::move(info)),
      count_(std::move(count)),
      ratio_(std::move(ratio)),
      phi_(std::move(phi)),
      cache_(std::make_shared<Cache>()) {}

BigInt SemigroupModel::count(std::size_t n) const {
  std::lock_guard lock(cache_->mutex);
  auto& counts = cache_->counts;
  while (counts.size() <= n) counts.push_back(count_(counts.size()));
  return counts[n];
}

std::vector<Rat> SemigroupModel::counts(std::size_t N) const {
  count(N);
  std::lock_guard lock(cache_->mutex);
  return std::vector<Rat>(cache_->counts.begin(), cache_->counts.begin() + N + 1);
}

std::vector<BigInt> SemigroupModel::primes(std::size_t N) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->primes.size() > N) return {cache_->primes.begin(), cache_->primes.begin() + N + 1};
  }
  const auto G = counts(N);
  const std::vector<Rat> ones(N + 1, Rat(1));
  auto inv = invert_to_primes(G, ones);
  if (!inv.integral) throw std::domain_error(info_.name + ": prime counts are not integral");
  std::vector<BigInt> out;
  out.reserve(N + 1);
  for (const auto& x : inv.t) out.emplace_back(x.get_num());
  std::lock_guard lock(cache_->mutex);
  if (cache_->primes.size() < out.size()) cache_->primes = out;
  return out;
}

PolyExpansion SemigroupModel::ratio_expansion(std::size_t R) const {
  if (!ratio_) throw std::domain_error(info_.name + " has no polynomial ratio expansion");
  return ratio_(R);
}

std::vector<Poly> SemigroupModel::phi(std::size_t s_max) const {
  if (!phi_) throw std::domain_error(info_.name + " has no phi polynomials");
  return phi_(s_max);
}

namespace {

BigFloat log_of(const BigInt& z) { return boost::multiprecision::log(to_bigfloat(z)); }

GrowthProfile graph_profile() {
  const BigFloat half_log2 = log_of(2) / 2;
  return GrowthProfile{half_log2, 1, BigFloat(-1), 1 - half_log2};
}

PolyExpansion graph_ratio(std::size_t R) {
  // psi_{R-1} needs phi up to R-2; derive one spare level.
  return psi_from_phi(derive_phi(R), R);
}

}  // namespace

SemigroupModel make_graphs() {
  ModelInfo info;
  info.name = "graphs";
  info.base = {Rat(2), 1};
  info.growth_exponent = 1;
  info.wright = true;
  info.d1 = 2;
  info.d2 = 1;
  info.profile = graph_profile();
  return SemigroupModel(std::move(info), graph_count, graph_ratio, derive_phi);
}

SemigroupModel make_even_graphs() {
  ModelInfo info;
  info.name = "even-graphs";
  info.base = {Rat(2), 1};
  info.growth_exponent = 1;
  info.wright = true;
  info.d1 = 2;
  info.d2 = 1;
  info.profile = graph_profile();
  // Same phi up to the global factor 1/2, hence the same ratio expansion.
  return SemigroupModel(std::move(info), even_edge_graph_count, graph_ratio, derive_phi);
}

SemigroupModel make_fq_poly(const BigInt& q, unsigned k) {
  if (!is_prime_power(q)) throw std::invalid_argument("field size must be a prime power, got " + to_string(q));
  if (k < 1) throw std::invalid_argument("need at least one variable");
  ModelInfo info;
  info.name = "fq-poly";
  info.params = {{"q", to_string(q)}, {"k", std::to_string(k)}};
  info.growth_exponent = k - 1;
  info.wright = k >= 2;
  // log G_n ~ log(q) n^k / k!, so the base is exp(alpha (a+1)) = q^{1/(k-1)!}.
  info.base = {Rat(q), factorial(k - 1).get_ui()};
  const BigFloat logq = log_of(q);
  const BigFloat alpha = logq / to_bigfloat(factorial(k));
  if (k == 2) {
    // log G_n = log(q) (n^2 + 3n)/2 + log((1 - q^{-n-1})/(1 - 1/q)).
    info.profile = GrowthProfile{alpha, 1, BigFloat(0), 3 * logq / 2};
  } else {
    info.profile = GrowthProfile{alpha, k - 1, BigFloat(0), BigFloat(0)};
  }
  SemigroupModel::CountFn count = [q, k](std::size_t n) { return fq_poly_count(q, k, n); };
  SemigroupModel::RatioFn ratio;
  if (k == 2) {
    info.d1 = 0;
    info.d2 = 0;
    ratio = [q](std::size_t R) { return fq_ratio_expansion(q, 2, R); };
  }
  return SemigroupModel(std::move(info), std::move(count), std::move(ratio));
}

SemigroupModel make_custom_semigroup(std::string name, std::vector<BigInt> counts) {
  if (counts.empty() || counts[0] != 1) throw std::invalid_argument("custom counts must start with G_0 = 1");
  for (const auto& c : counts) {
    if (c < 0) throw std::invalid_argument("custom counts must be non-negative");
  }
  ModelInfo info;
  info.name = std::move(name);
  info.base = {Rat(2), 1};
  info.growth_exponent = 0;
  info.wright = false;
  auto shared = std::make_shared<const std::vector<BigInt>>(std::move(counts));
  SemigroupModel::CountFn count = [shared](std::size_t n) {
    if (n >= shared->size()) throw std::out_of_range("custom semigroup has no count for n = " + std::to_string(n));
    return (*shared)[n];
  };
  return SemigroupModel(std::move(info), std::move(count));
}

SemigroupModel make_semigroup(const SemigroupSpec& spec) {
  if (spec.name == "graphs") return make_graphs();
  if (spec.name == "even-graphs") return make_even_graphs();
  if (spec.name == "fq-poly") return make_fq_poly(spec.q, spec.k);
  if (spec.name == "custom") return make_custom_semigroup("custom", spec.counts);
  throw std::invalid_argument("unknown semigroup '" + spec.name + "'");
}

std::vector<ProfileRow> wright_log_profile(const SemigroupModel& model, std::size_t N) {
  const auto& profile = model.info().profile;
  if (!profile) throw std::domain_error(model.name() + " declares no growth profile");
  std::vector<ProfileRow> rows;
  for (std::size_t n = 1; n <= N; ++n) {
    const BigFloat x(n);
    const BigFloat lg = log_of(model.count(n));
    const BigFloat model_value = profile->alpha * boost::multiprecision::pow(x, profile->a + 1) +
                                 profile->beta * x * boost::multiprecision::log(x) + profile->gamma * x;
    rows.push_back({n, lg, lg - model_value});
  }
  return rows;
}

}  // namespace wright
