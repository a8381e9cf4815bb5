#include <doctest.h>

#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oracles.hpp"
#include "wright/diagnostics.hpp"
#include "wright/semigroups.hpp"

using namespace wright;

namespace {

std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("graph counts") {
  CHECK(graph_count(0) == 1);
  CHECK(graph_count(1) == 1);
  CHECK(graph_count(2) == 2);
  CHECK(graph_count(3) == 4);
  CHECK(graph_count(4) == 11);
  CHECK(graph_count(5) == 34);
  CHECK(graph_count(10) == 12005168);
  CHECK(even_edge_graph_count(0) == 1);
  CHECK(make_graphs().counts(4) == R({1, 1, 2, 4, 11}));
  CHECK(make_even_graphs().counts(5) == R({1, 1, 1, 2, 6, 18}));
}

TEST_CASE("graph counts against orbit enumeration") {
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const auto orbits = oracle::labeled_graph_orbits(n);
    CHECK(graph_count(n) == orbits.all);
    CHECK(even_edge_graph_count(n) == orbits.even);
    CHECK(graph_count(n) - even_edge_graph_count(n) == orbits.odd);
  }
}

TEST_CASE("polynomials over finite fields") {
  CHECK(fq_poly_count(2, 2, 0) == 1);
  CHECK(fq_poly_count(2, 2, 1) == 6);
  CHECK(fq_poly_count(2, 2, 2) == 56);
  CHECK(fq_poly_count(2, 2, 3) == 960);
  CHECK(fq_poly_count(3, 1, 2) == 9);
  CHECK(fq_poly_count(5, 3, 0) == 1);
  CHECK(is_prime_power(4));
  CHECK(is_prime_power(9));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(1));
  CHECK_THROWS(make_fq_poly(6, 2));
  // monic irreducibles over F_2 in one variable: 2, 1, 2, 3, 6
  CHECK(make_fq_poly(2, 1).primes(5) == std::vector<BigInt>{0, 2, 1, 2, 3, 6});
}

TEST_CASE("phi polynomials") {
  const auto phi = derive_phi(3);
  CHECK(phi[0] == Poly{1});
  CHECK(phi[1] == Poly{0, -2, 2});
  CHECK(phi[2] == Poly{0, make_rat(-112, 3), 72, make_rat(-128, 3), 8});
  CHECK(phi[3] == Poly{0, -9600, 21952, make_rat(-54272, 3), make_rat(20672, 3), make_rat(-3712, 3),
                       make_rat(256, 3)});
  for (std::size_t s = 0; s < phi.size(); ++s) CHECK(phi[s].degree() == static_cast<int>(2 * s));
}

TEST_CASE("phi reproduces the exact normalized counts") {
  // G_n n! / 2^{C(n,2)} = sum_{s<=n-1} phi_s(n) 2^{-sn} exactly
  const std::size_t smax = 7;
  const auto phi = derive_phi(smax);
  for (std::size_t n = 1; n <= smax + 1; ++n) {
    Rat sum;
    for (std::size_t s = 0; s + 1 <= n; ++s)
      sum += poly_eval(phi[s], static_cast<long>(n)) / pow(Rat(2), static_cast<long>(s * n));
    const Rat exact = Rat(graph_count(n) * factorial(n)) / pow(Rat(2), static_cast<long>(n * (n - 1) / 2));
    CHECK(sum == exact);
  }
}

TEST_CASE("psi polynomials") {
  const auto psi = make_graphs().ratio_expansion(5);
  CHECK(psi.base() == 2);
  CHECK(psi.term(0).is_zero());
  CHECK(psi.term(1) == Poly{0, 2});
  CHECK(psi.term(3) == Poly{0, 1280, -2624, 1768, -464, 40});
  CHECK(psi.term(4) == Poly{0, 925696, -2250240, make_rat(6137792, 3), -908496, make_rat(630608, 3), -24176,
                            make_rat(3248, 3)});
  for (std::size_t s = 1; s < 5; ++s) CHECK(psi.term(s).degree() == static_cast<int>(2 * s - 1));
  CHECK(make_even_graphs().ratio_expansion(5) == psi);
}

TEST_CASE("psi expansion approximates the count ratio") {
  const auto G = make_graphs().counts(22);
  for (std::size_t R = 1; R <= 4; ++R) {
    const auto psi = make_graphs().ratio_expansion(R);
    RatioTable table;
    for (std::size_t n = 10; n <= 22; ++n) {
      const long ln = static_cast<long>(n);
      const Rat residual = G[n - 1] / G[n] - psi.evaluate(ln);
      table.push_back({n, residual * pow(Rat(2), static_cast<long>(R) * ln) / pow(Rat(ln), 2 * static_cast<long>(R) - 1)});
    }
    CAPTURE(R);
    CHECK(judge_bounded(table).bounded);
  }
}

TEST_CASE("finite-field ratio expansion") {
  const auto psi = fq_ratio_expansion(2, 2, 4);
  CHECK(psi.term(1) == Poly{make_rat(1, 2)});
  CHECK(psi.term(2) == Poly{make_rat(-1, 4)});
  CHECK(psi.term(3) == Poly{make_rat(-1, 8)});
  CHECK(fq_ratio_expansion(3, 2, 3).term(2) == Poly{make_rat(-2, 9)});
  CHECK_THROWS_WITH_AS(fq_ratio_expansion(2, 3, 3), doctest::Contains("no polynomial ratio expansion"),
                       std::domain_error);

  // truncation error at n = 6, R = 8 is below the geometric tail
  const auto model = make_fq_poly(2, 2);
  const Rat exact = Rat(model.count(5)) / Rat(model.count(6));
  const Rat approx = fq_ratio_expansion(2, 2, 8).evaluate(6);
  const Rat tail = 2 * pow(Rat(2), -8 * 6);
  CHECK(abs(exact - approx) <= tail);
}

TEST_CASE("model metadata") {
  const auto g = make_graphs();
  CHECK(g.info().wright);
  CHECK(g.info().d1 == 2);
  CHECK(g.info().d2 == 1);
  CHECK(g.info().growth_exponent == 1);
  const auto f = make_fq_poly(2, 2);
  CHECK(f.info().d1 == 0);
  CHECK(f.info().d2 == 0);
  CHECK(f.has_ratio_expansion());
  const auto f3 = make_fq_poly(2, 3);
  CHECK(f3.info().growth_exponent == 2);
  CHECK_FALSE(f3.has_ratio_expansion());
  CHECK_THROWS_AS(f3.ratio_expansion(3), std::domain_error);
  CHECK_FALSE(make_fq_poly(2, 1).info().wright);

  const auto custom = make_custom_semigroup("line", {1, 1, 1, 1});
  CHECK(custom.count(3) == 1);
  CHECK_THROWS(custom.count(4));
  CHECK_THROWS(make_custom_semigroup("bad", {2, 1}));
  CHECK_THROWS_AS(make_semigroup({"nope"}), std::invalid_argument);
}

TEST_CASE("log profiles") {
  const auto rows = wright_log_profile(make_graphs(), 30);
  REQUIRE(rows.size() == 30);
  for (const auto& r : rows) {
    // residual is about -log(2 pi n)/2
    CHECK(boost::multiprecision::abs(r.residual) < 2 + boost::multiprecision::log(BigFloat(r.n)));
  }
  const auto fq = wright_log_profile(make_fq_poly(2, 2), 20);
  for (const auto& r : fq) CHECK(boost::multiprecision::abs(r.residual) < 2);
  const auto fq3 = wright_log_profile(make_fq_poly(2, 3), 12);
  for (const auto& r : fq3) CHECK(boost::multiprecision::abs(r.residual) < 4 * BigFloat(r.n * r.n));
  CHECK_THROWS_AS(wright_log_profile(make_custom_semigroup("c", {1, 1}), 1), std::domain_error);
}

TEST_CASE("counts are safe under concurrent access") {
  const auto g = make_graphs();
  std::vector<std::thread> threads;
  std::vector<BigInt> out(8);
  for (std::size_t i = 0; i < out.size(); ++i) threads.emplace_back([&, i] { out[i] = g.count(12 + i % 3); });
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == graph_count(12 + i % 3));
}
