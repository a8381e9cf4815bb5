#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wright/series.hpp"

using namespace wright;

namespace {

TruncatedSeries S(std::vector<Rat> c) { return TruncatedSeries(std::move(c)); }
std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-12")) == "-12");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK(pow(Rat(2), -3) == make_rat(1, 8));
  CHECK(binomial(BigInt(6), 3) == 20);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("addition follows the min-order rule") {
  CHECK(S(R({1, 1})) + S(R({1, -1})) == S(R({2, 0})));
  CHECK(TruncatedSeries(3) + S(R({1, 2, 3, 4})) == S(R({1, 2, 3, 4})));
  CHECK(S(R({1, 2, 3})) + S(R({1, 1})) == S(R({2, 3})));
}

TEST_CASE("multiplication") {
  CHECK(S(R({1, -1, 0, 0})) * S(R({1, 1, 1, 1})) == S(R({1, 0, 0, 0})));
  CHECK(S(R({1, 1, 2, 4, 11})) * S(R({1, 1, 2, 4, 11})) == S(R({1, 2, 5, 12, 34})));
  CHECK(S(R({1, 1, 0})) * S(R({1, 1, 0})) == S(R({1, 2, 1})));
}

TEST_CASE("inverse, log and exp") {
  CHECK(inverse(S(R({1, 1, 0, 0}))) == S(R({1, -1, 1, -1})));
  CHECK_THROWS_WITH_AS(inverse(S(R({0, 1}))), doctest::Contains("not invertible"), std::domain_error);

  const auto lg = log(inverse(S(R({1, -1, 0, 0}))));
  CHECK(lg == S({Rat(0), Rat(1), make_rat(1, 2), make_rat(1, 3)}));
  CHECK(log(TruncatedSeries::one(4)) == TruncatedSeries(4));
  CHECK_THROWS_AS(log(S(R({2, 1}))), std::domain_error);

  CHECK(exp(TruncatedSeries(3)) == TruncatedSeries::one(3));
  CHECK(exp(log(S(R({1, 1, 0, 0, 0})))) == S(R({1, 1, 0, 0, 0})));
  CHECK(exp(S(R({0, 1, 0, 0, 0}))) ==
        S({Rat(1), Rat(1), make_rat(1, 2), make_rat(1, 6), make_rat(1, 24)}));
  CHECK_THROWS_AS(exp(S(R({1, 1}))), std::domain_error);
}

TEST_CASE("integer powers") {
  CHECK(int_pow(S(R({1, 1, 0, 0})), 3ul) == S(R({1, 3, 3, 1})));
  const auto f = S(R({1, 2, 2, 2}));
  CHECK(int_pow(f, BigInt(1)) == f);
  CHECK(int_pow(f, 0ul) == TruncatedSeries::one(3));
  CHECK(int_pow(f, BigInt(2)) == f * f);
  CHECK_THROWS(int_pow(f, BigInt(-2)));
}

TEST_CASE("euler product") {
  const std::vector<Rat> ones(8, Rat(1));
  std::vector<BigInt> t{0, 1, 0, 0, 0, 0, 0, 0};
  CHECK(euler_product(t, ones, 7) == S(std::vector<Rat>(8, Rat(1))));

  const std::vector<BigInt> connected{0, 1, 1, 2, 6};
  CHECK(euler_product(connected, ones, 4) == S(R({1, 1, 2, 4, 11})));

  std::vector<Rat> d2{1, 2, 3, 4, 5};
  CHECK(euler_product(connected, d2, 4) == S(R({1, 2, 5, 12, 34})));

  std::vector<Rat> bad{2, 1};
  CHECK_THROWS(euler_product(std::vector<BigInt>{0, 1}, bad, 1));
}

TEST_CASE("series properties against naive arithmetic") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = 1 + trial % 9;
    const auto a = oracle::random_series(rng, N, false);
    const auto b = oracle::random_series(rng, N, false);
    const auto u = oracle::random_series(rng, N, true);
    CHECK(mul(S(a), S(b)) == S(oracle::naive_mul(a, b)));
    CHECK(S(a) * S(b) == S(b) * S(a));
    CHECK(inverse(S(u)) == S(oracle::naive_inverse(u)));
    CHECK(exp(log(S(u))) == S(u));
    CHECK(int_pow(S(u), 5ul) == S(u) * S(u) * S(u) * S(u) * S(u));
    CHECK(log(S(u) * S(u)) == log(S(u)) + log(S(u)));
  }
}

TEST_CASE("euler product matches term-by-term expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto tr = oracle::random_triple(rng, 8);
    CHECK(euler_product(tr.t, tr.a, 8) == S(oracle::euler_product_naive(tr.t, tr.a, 8)));
  }
  // negative exponents invert the factor
  std::vector<BigInt> t{0, -1, 2, -3};
  std::vector<Rat> a{1, 1, 1, 1};
  auto lhs = euler_product(t, a, 3);
  auto f1 = S(R({1, 1, 1, 1}));
  auto f2 = S(R({1, 0, 1, 0}));
  auto f3 = S(R({1, 0, 0, 1}));
  CHECK(lhs == inverse(f1) * f2 * f2 * inverse(f3 * f3 * f3));
}
