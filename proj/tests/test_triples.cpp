#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wright/semigroups.hpp"
#include "wright/triples.hpp"

using namespace wright;

namespace {

std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

WarlimontTriple model_triple(const SemigroupModel& m, std::size_t N) {
  return WarlimontTriple::from_primes(m.primes(N), std::vector<Rat>(N + 1, Rat(1)), N);
}

}  // namespace

TEST_CASE("derived sequences") {
  CHECK(derive_v(R({1, 1, 2, 4, 11}))[1] == 1);
  CHECK(derive_v(R({1, 0, 0, 0})) == R({0, 0, 0, 0}));
  CHECK(derive_beta(R({1, 0, 0, 0})) == R({1, 0, 0, 0}));
  CHECK(derive_beta(R({1, 1, 2, 4, 11})) == R({1, -1, -1, -1, -4}));
  CHECK(derive_beta(R({1, 1, 1, 2, 6})) == R({1, -1, 0, -1, -3}));
  CHECK(derive_b(R({1, 1, 1, 1, 1})) == R({0, 1, 1, 1, 1}));
  CHECK(derive_b(R({1, 1, 0, 0, 0, 0})) == R({0, 1, -1, 1, -1, 1}));
}

TEST_CASE("inversion to primes") {
  const auto ones = R({1, 1, 1, 1, 1, 1});
  auto inv = invert_to_primes(R({1, 1, 2, 4, 11, 34}), ones);
  CHECK(inv.integral);
  CHECK(inv.t == R({0, 1, 1, 2, 6, 21}));

  inv = invert_to_primes(R({1, 1, 1, 1, 1, 1}), ones);
  CHECK(inv.t == R({0, 1, 0, 0, 0, 0}));

  const auto even = R({1, 1, 1, 2, 6});
  inv = invert_to_primes(even, R({1, 1, 1, 1, 1}));
  CHECK(inv.t == R({0, 1, 0, 1, 4}));
  std::vector<BigInt> t;
  for (const auto& x : inv.t) t.push_back(x.get_num());
  CHECK(WarlimontTriple::from_primes(t, R({1, 1, 1, 1, 1}), 4).T()[4] == 6);

  inv = invert_to_primes(R({1, 1, 3}), R({1, 2, 1}));
  CHECK_FALSE(inv.integral);
  CHECK_THROWS(WarlimontTriple::from_counts(R({1, 1, 3}), R({1, 2, 1})).integer_primes());
  CHECK_THROWS_AS(WarlimontTriple(R({1, 1}), R({0, 1}), R({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(WarlimontTriple(R({2, 1}), R({0, 1}), R({1, 1})), std::invalid_argument);
}

TEST_CASE("graph prime counts are non-negative integers up to 16") {
  const auto triple = WarlimontTriple::from_counts(make_graphs().counts(16), std::vector<Rat>(17, Rat(1)));
  CHECK(triple.integral_primes());
  CHECK(triple.admissible());
  for (const auto& t : triple.t()) CHECK(t >= 0);
}

TEST_CASE("identity suites on the concrete triples") {
  for (const auto& model : {make_graphs(), make_even_graphs(), make_fq_poly(2, 2)}) {
    CAPTURE(model.name());
    const auto triple = model_triple(model, 14);
    CHECK(check_lemma2_identities(triple, 14).ok());
    CHECK(check_lemma3(triple, 14).ok());
    CHECK(check_beta_convolution(triple.T(), 14).ok());
    CHECK(triple.satisfies_product_identity());
  }
  CHECK(check_lemma3(model_triple(make_fq_poly(2, 2), 8), 8).ok());
}

TEST_CASE("identity suites on random admissible triples") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto r = oracle::random_triple(rng, 10);
    const auto triple = WarlimontTriple::from_primes(r.t, r.a, 10);
    REQUIRE(triple.admissible());
    const auto report = check_lemma2_identities(triple, 10);
    if (!report.ok()) FAIL_CHECK(report.failure->identity << " n=" << report.failure->n);
    CHECK(check_lemma3(triple, 10).ok());
    CHECK(check_beta_convolution(triple.T(), 10).ok());
    const auto back = invert_to_primes(triple.T(), triple.a());
    CHECK(back.t == std::vector<Rat>(triple.t().begin(), triple.t().end()));
  }
}

TEST_CASE("identity failures are reported with location") {
  // a corrupted T breaks beta * T = delta only through beta, so perturb beta's input
  auto T = make_graphs().counts(6);
  WarlimontTriple triple(T, R({0, 1, 1, 2, 6, 21, 112}), std::vector<Rat>(7, Rat(1)));
  CHECK(check_lemma2_identities(triple, 6).ok());
  WarlimontTriple broken(T, R({0, 1, 1, 2, 7, 21, 112}), std::vector<Rat>(7, Rat(1)));
  const auto report = check_lemma2_identities(broken, 6);
  REQUIRE_FALSE(report.ok());
  CHECK(report.failure->n == 4);
  CHECK_FALSE(broken.satisfies_product_identity());
}

TEST_CASE("lemma 3 bound excludes the middle term") {
  const auto model = make_graphs();
  const auto triple = WarlimontTriple::from_primes(model.primes(6), R({1, 2, 3, 4, 5, 6, 7}), 6);
  CHECK(check_lemma3(triple, 6).ok());
  // including s = n/2 at n = 2 gives a_1 (T_0 t_2 + T_1 t_1) = 2 (1 + 2) = 6 > T_2 = 5
  const auto T = triple.T();
  const auto t = triple.t();
  CHECK(triple.a()[1] * (T[0] * t[2] + T[1] * t[1]) > T[2]);
}

TEST_CASE("lemma 3 needs non-negative primes") {
  WarlimontTriple triple(R({1, 1, 0}), R({0, 1, -1}), R({1, 1, 1}));
  CHECK_THROWS_AS(check_lemma3(triple, 2), std::domain_error);
}

TEST_CASE("growth diagnostics") {
  const auto graphs = model_triple(make_graphs(), 14);
  CHECK(judge_bounded(lemma4_ratios(graphs, 1, 14), BoundCriterion::NonGrowing).bounded);
  const auto fq = model_triple(make_fq_poly(2, 2), 10);
  CHECK(judge_bounded(lemma4_ratios(fq, 2, 10), BoundCriterion::NonGrowing).bounded);

  // a single prime of degree 1: v_n = a_1^n-free values, ratios finite
  WarlimontTriple line(R({1, 1, 1, 1, 1, 1}), R({0, 1, 0, 0, 0, 0}), R({1, 1, 1, 1, 1, 1}));
  for (const auto& row : lemma4_ratios(line, 1, 5)) {
    if (row.ratio) CHECK(*row.ratio >= 0);
  }

  const auto G = make_graphs().counts(20);
  for (std::size_t R = 1; R <= 4; ++R) {
    const auto tables = check_axiom_WR(G, R, 20);
    CHECK(judge_bounded(tables.convolution).bounded);
    CHECK(judge_bounded(tables.successive, BoundCriterion::NonGrowing).bounded);
    CHECK(decreasing_upper_half(tables.successive));
    for (const auto& row : tables.convolution) {
      if (row.n < 2 * R) CHECK(*row.ratio == 0);
    }
  }
  const auto Q = make_fq_poly(2, 2).counts(14);
  CHECK(judge_bounded(check_axiom_WR(Q, 3, 14).convolution).bounded);

  const auto g = growth_condition_tables(graphs, 2, 14);
  CHECK(judge_bounded(g.counts_convolution).bounded);
  CHECK(judge_bounded(g.primes_convolution).bounded);
  CHECK(judge_bounded(g.primes_from_counts, BoundCriterion::NonGrowing).bounded);
  CHECK(judge_bounded(g.counts_from_primes, BoundCriterion::NonGrowing).bounded);
  CHECK(decreasing_upper_half(g.primes_successive));
}

TEST_CASE("bounded-ratio criteria") {
  RatioTable flat, growing, empty_upper;
  for (std::size_t n = 0; n < 10; ++n) {
    flat.push_back({n, Rat(3) + make_rat(1, static_cast<long>(n + 1))});
    growing.push_back({n, pow(Rat(3), static_cast<long>(n))});
    empty_upper.push_back({n, n < 5 ? std::optional<Rat>(1) : std::nullopt});
  }
  CHECK(judge_bounded(flat).bounded);
  CHECK(judge_bounded(flat, BoundCriterion::NonGrowing).bounded);
  CHECK_FALSE(judge_bounded(growing).bounded);
  CHECK_FALSE(judge_bounded(growing, BoundCriterion::NonGrowing).bounded);
  CHECK_FALSE(judge_bounded(empty_upper).bounded);
}
