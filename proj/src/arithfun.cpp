#include "wright/arithfun.hpp"

#include <future>
#include <stdexcept>
#include <utility>

#include "wright/series.hpp"

namespace wright {

WarlimontFn::WarlimontFn(std::string name, Values values) : name_(std::move(name)), values_(std::move(values)) {
  f1plus_ = values_(1);
  if (f1plus_ <= 0) throw std::invalid_argument(name_ + ": F^+_1 must be positive");
}

Rat WarlimontFn::prime_power_value(std::size_t k) const {
  if (k == 0) return 1;
  Rat v = values_(k);
  if (v < 0) throw std::domain_error(name_ + ": negative prime-power value at k = " + std::to_string(k));
  return v;
}

std::vector<Rat> WarlimontFn::values(std::size_t N) const {
  std::vector<Rat> out(N + 1);
  for (std::size_t k = 0; k <= N; ++k) out[k] = prime_power_value(k);
  return out;
}

WarlimontFn constant_one() {
  return WarlimontFn("one", [](std::size_t) { return Rat(1); });
}

WarlimontFn dk_values(unsigned k) {
  if (k < 2) throw std::invalid_argument("d_k needs k >= 2");
  return WarlimontFn("d" + std::to_string(k),
                     [k](std::size_t n) { return Rat(binomial(BigInt(n + k - 1), k - 1)); });
}

WarlimontFn dstar_values() {
  return WarlimontFn("dstar", [](std::size_t) { return Rat(2); });
}

WarlimontFn bigB_values() {
  return WarlimontFn("bigB", [](std::size_t n) { return Rat(n); });
}

WarlimontFn custom_values(std::string name, std::vector<Rat> values) {
  if (values.empty()) throw std::invalid_argument("custom function needs at least F^+_1");
  for (const auto& v : values) {
    if (v < 0) throw std::invalid_argument("custom values must be non-negative");
  }
  auto shared = std::make_shared<const std::vector<Rat>>(std::move(values));
  return WarlimontFn(std::move(name), [shared](std::size_t k) {
    if (k > shared->size()) throw std::out_of_range("custom function has no value for k = " + std::to_string(k));
    return (*shared)[k - 1];
  });
}

WarlimontFn fn_power(const WarlimontFn& F, unsigned m) {
  if (m == 0) throw std::invalid_argument("power must be at least 1");
  if (m == 1) return F;
  return WarlimontFn(F.name() + "^" + std::to_string(m),
                     [F, m](std::size_t k) { return pow(F.prime_power_value(k), static_cast<long>(m)); });
}

WarlimontFn make_function(const std::string& name, unsigned k, const std::vector<Rat>& custom) {
  if (name == "one") return constant_one();
  if (name == "dk") return dk_values(k);
  if (name.size() > 1 && name[0] == 'd' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return dk_values(static_cast<unsigned>(std::stoul(name.substr(1))));
  }
  if (name == "dstar") return dstar_values();
  if (name == "bigB") return bigB_values();
  if (name == "custom") return custom_values("custom", custom);
  throw std::invalid_argument("unknown function '" + name + "'");
}

std::vector<Rat> fn_totals(const WarlimontFn& F, std::span<const BigInt> primes, std::size_t N) {
  auto series = euler_product(primes, F.values(N), N);
  return {series.coeffs().begin(), series.coeffs().end()};
}

namespace {

// Sum over ways to give distinct primes of one degree exponents summing to
// `weight`: each exponent multiset {e_i} with multiplicities c_e admits
// C(P, j) j! / prod c_e! prime assignments (j = number of exponents).
Rat one_degree_weight(const BigInt& prime_count, std::size_t weight, std::span<const Rat> values) {
  Rat total;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      const std::size_t j = parts.size();
      if (prime_count < j) return;
      BigInt ways = binomial(prime_count, j) * factorial(j);
      Rat product = 1;
      std::size_t run = 1;
      for (std::size_t i = 0; i < j; ++i) {
        product *= values[parts[i]];
        if (i + 1 < j && parts[i + 1] == parts[i]) {
          ++run;
        } else {
          ways /= factorial(run);
          run = 1;
        }
      }
      total += Rat(ways) * product;
      return;
    }
    for (std::size_t e = std::min(remaining, max_part); e >= 1; --e) {
      parts.push_back(e);
      self(self, remaining - e, e);
      parts.pop_back();
    }
  };
  rec(rec, weight, weight);
  return total;
}

}  // namespace

Rat oracle_prime_multiset(const WarlimontFn& F, std::span<const BigInt> primes, std::size_t n) {
  if (n > 10) throw std::invalid_argument("prime-multiset oracle is limited to n <= 10");
  if (primes.size() <= n) throw std::invalid_argument("prime counts shorter than n");
  const auto values = F.values(n);
  // Choose, degree by degree, how much of n is spent on primes of degree m.
  auto rec = [&](auto&& self, std::size_t m, std::size_t remaining) -> Rat {
    if (remaining == 0) return 1;
    if (m > remaining) return 0;
    Rat total;
    for (std::size_t w = 0; w * m <= remaining; ++w) {
      const Rat here = w == 0 ? Rat(1) : one_degree_weight(primes[m], w, values);
      if (here != 0) total += here * self(self, m + 1, remaining - w * m);
    }
    return total;
  };
  return rec(rec, 1, n);
}

MomentTable moment_table(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t N,
                         bool parallel) {
  if (M == 0) throw std::invalid_argument("moment order M must be positive");
  const auto G = model.counts(N);
  const auto primes = model.primes(N);
  std::vector<std::vector<Rat>> totals(M + 1);
  totals[0] = G;
  if (parallel) {
    std::vector<std::future<std::vector<Rat>>> jobs;
    for (unsigned m = 1; m <= M; ++m) {
      jobs.push_back(std::async(std::launch::async, [&, m] { return fn_totals(fn_power(F, m), primes, N); }));
    }
    for (unsigned m = 1; m <= M; ++m) totals[m] = jobs[m - 1].get();
  } else {
    for (unsigned m = 1; m <= M; ++m) totals[m] = fn_totals(fn_power(F, m), primes, N);
  }
  MomentTable table{F.name(), M, std::vector<Rat>(N + 1)};
  for (std::size_t n = 0; n <= N; ++n) {
    Rat acc;
    for (unsigned m = 0; m <= M; ++m) {
      Rat term = Rat(binomial(BigInt(M), m)) * totals[m][n] / pow(F.f1plus(), static_cast<long>(m));
      if (m % 2 == 1) term = -term;
      acc += term;
    }
    if (M % 2 == 1) acc = -acc;
    table.mu[n] = acc / G[n];
  }
  return table;
}

Rat exact_moment(const WarlimontFn& F, const SemigroupModel& model, unsigned M, std::size_t n) {
  return moment_table(F, model, M, n).mu[n];
}

}  // namespace wright
