#include <doctest.h>

#include "oracles.hpp"
#include "wright/arithfun.hpp"

using namespace wright;

namespace {

std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<WarlimontFn> all_functions() {
  return {constant_one(), dk_values(2), dk_values(3), dstar_values(), bigB_values(),
          custom_values("c", {Rat(3), make_rat(1, 2), Rat(0), Rat(5), Rat(1), Rat(2), Rat(7), Rat(1)})};
}

}  // namespace

TEST_CASE("prime power values") {
  CHECK(dk_values(3).prime_power_value(2) == 6);
  CHECK(dk_values(2).prime_power_value(0) == 1);
  CHECK(dstar_values().prime_power_value(1) == 2);
  CHECK(dstar_values().prime_power_value(7) == 2);
  CHECK(bigB_values().prime_power_value(1) == 1);
  CHECK(bigB_values().prime_power_value(5) == 5);
  CHECK(constant_one().values(3) == R({1, 1, 1, 1}));
  CHECK(fn_power(dstar_values(), 2).prime_power_value(3) == 4);
  CHECK(fn_power(dk_values(2), 1).values(4) == dk_values(2).values(4));
  CHECK_THROWS_AS(fn_power(dk_values(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(dk_values(1), std::invalid_argument);
  CHECK_THROWS_AS(custom_values("c", {Rat(0)}), std::invalid_argument);
  CHECK_THROWS(custom_values("c", {Rat(1), Rat(-1)}));
  CHECK_THROWS_AS(custom_values("c", {Rat(1)}).prime_power_value(2), std::out_of_range);
  CHECK(make_function("d4").prime_power_value(1) == 4);
  CHECK(make_function("dk", 5).prime_power_value(1) == 5);
  CHECK_THROWS_AS(make_function("sigma"), std::invalid_argument);
}

TEST_CASE("totals") {
  const auto graphs = make_graphs();
  const auto even = make_even_graphs();
  const auto fq = make_fq_poly(2, 2);
  CHECK(fn_totals(dk_values(2), graphs.primes(4), 4) == R({1, 2, 5, 12, 34}));
  CHECK(fn_totals(dstar_values(), even.primes(4), 4) == R({1, 2, 2, 4, 14}));
  CHECK(fn_totals(fn_power(dstar_values(), 2), even.primes(4), 4) == R({1, 4, 4, 8, 36}));
  CHECK(fn_totals(bigB_values(), fq.primes(3), 3) == R({1, 6, 62, 1002}));
  for (unsigned m = 1; m <= 4; ++m)
    CHECK(fn_totals(fn_power(constant_one(), m), graphs.primes(8), 8) == graphs.counts(8));
}

TEST_CASE("totals against the prime-multiset oracle") {
  for (const auto& model : {make_graphs(), make_even_graphs(), make_fq_poly(2, 2)}) {
    const auto primes = model.primes(8);
    for (const auto& F : all_functions()) {
      CAPTURE(model.name());
      CAPTURE(F.name());
      const auto totals = fn_totals(F, primes, 8);
      for (std::size_t n = 0; n <= 8; ++n) CHECK(totals[n] == oracle_prime_multiset(F, primes, n));
    }
  }
  CHECK(oracle_prime_multiset(dk_values(2), make_graphs().primes(4), 4) == 34);
  CHECK(oracle_prime_multiset(bigB_values(), make_fq_poly(2, 2).primes(2), 2) == 62);
  CHECK_THROWS_AS(oracle_prime_multiset(constant_one(), make_graphs().primes(11), 11), std::invalid_argument);
}

TEST_CASE("d_k totals equal k-fold convolutions of the counts") {
  for (const auto& model : {make_graphs(), make_even_graphs(), make_fq_poly(2, 2)}) {
    const auto G = model.counts(12);
    for (unsigned k = 2; k <= 4; ++k) {
      CAPTURE(model.name());
      CAPTURE(k);
      CHECK(fn_totals(dk_values(k), model.primes(12), 12) == oracle::k_fold_convolution(G, k, 12));
    }
  }
}

TEST_CASE("moments") {
  const auto graphs = make_graphs();
  CHECK(exact_moment(dk_values(2), graphs, 1, 2) == make_rat(1, 4));
  // the identity has F~ = 1/F^+_1, so mu(0) vanishes exactly when F^+_1 = 1
  for (const auto& F : all_functions()) {
    const Rat base = 1 / F.f1plus() - 1;
    CHECK(exact_moment(F, graphs, 1, 0) == base);
    CHECK(exact_moment(F, graphs, 3, 0) == pow(base, 3));
  }
  CHECK(exact_moment(bigB_values(), make_fq_poly(2, 2), 2, 0) == 0);
  // M = 1 is the normalized average minus one
  const auto even = make_even_graphs();
  const auto totals = fn_totals(dstar_values(), even.primes(10), 10);
  const auto G = even.counts(10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(exact_moment(dstar_values(), even, 1, n) == totals[n] / 2 / G[n] - 1);

  const auto serial = moment_table(dk_values(3), graphs, 3, 14, false);
  const auto parallel = moment_table(dk_values(3), graphs, 3, 14, true);
  CHECK(serial.mu == parallel.mu);
  CHECK(exact_moment(dk_values(3), graphs, 3, 9) == serial.mu[9]);
}

TEST_CASE("average values tend to the prime value") {
  // |F_n/G_n - F_1^+| decreases and the second central moment shrinks
  struct Case {
    SemigroupModel model;
    WarlimontFn F;
  };
  for (const auto& c : {Case{make_graphs(), dk_values(2)}, Case{make_even_graphs(), dstar_values()},
                        Case{make_fq_poly(2, 2), bigB_values()}}) {
    CAPTURE(c.model.name());
    const auto totals = fn_totals(c.F, c.model.primes(18), 18);
    const auto G = c.model.counts(18);
    Rat prev = -1;
    for (std::size_t n = 8; n <= 18; ++n) {
      const Rat gap = abs(totals[n] / G[n] - c.F.f1plus());
      if (prev >= 0) CHECK(gap < prev);
      prev = gap;
    }
    const auto second = moment_table(c.F, c.model, 2, 18);
    for (std::size_t n = 9; n <= 18; ++n) CHECK(abs(second.mu[n]) < abs(second.mu[n - 1]));
  }
}
