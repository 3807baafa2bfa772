#include <gtest/gtest.h>

#include "convert.hpp"
#include "lendens/lendens.hpp"
#include "oracles.hpp"

using namespace lendens;

TEST(LengthStats, Basic) {
  auto st = length_stats(LengthSet{3, 7, 8, 9, 10});
  EXPECT_EQ(st.min_len, 3);
  EXPECT_EQ(st.max_len, 10);
  EXPECT_EQ(st.elasticity, Rational(10, 3));
  EXPECT_EQ(st.delta, (std::vector<std::int64_t>{1, 4}));
  ASSERT_TRUE(st.ld.has_value());
  EXPECT_EQ(*st.ld, Rational(4, 7));
  EXPECT_FALSE(length_density(LengthSet{5}).has_value());
  EXPECT_THROW(length_stats(LengthSet{}), Error);
}

TEST(LdSearch, SixNineTwenty) {
  auto s = make_numerical({6, 9, 20});
  auto rep = ld_search(s, 400);
  EXPECT_EQ(rep.minimum_ld, Rational(4, 7));
  EXPECT_EQ(rep.witness, Element::natural(60));
  EXPECT_EQ(rep.witness_lengths, (LengthSet{3, 7, 8, 9, 10}));
  EXPECT_EQ(rep.max_delta_seen, 4);
  EXPECT_EQ(rep.lower_bound_certificate, Rational(1, 4));
  EXPECT_FALSE(rep.accepted_within_scan);
  EXPECT_EQ(delta_scan(s, 400), (std::vector<std::int64_t>{1, 2, 3, 4}));
}

TEST(LdSearch, NoLdElements) {
  auto s = make_numerical({1});
  EXPECT_THROW(ld_search(s, 50), Error);
}

TEST(LdSearch, ThreadCountDoesNotChangeReport) {
  auto chain = chain_monoid(4);
  auto one = ld_search(chain, 10, {kDefaultBudget, 1});
  auto four = ld_search(chain, 10, {kDefaultBudget, 4});
  EXPECT_EQ(one.minimum_ld, four.minimum_ld);
  EXPECT_EQ(one.witness, four.witness);
  EXPECT_EQ(one.elements_scanned, four.elements_scanned);
  EXPECT_EQ(delta_scan(chain, 10, {kDefaultBudget, 1}), delta_scan(chain, 10, {kDefaultBudget, 3}));
}

TEST(Betti, TwentyTwentyEight) {
  auto s = make_numerical({20, 28, 42, 73});
  auto betti = betti_scan(s, 300);
  std::vector<Element> expected{Element::natural(84), Element::natural(140), Element::natural(146)};
  EXPECT_EQ(betti, expected);
  auto rep = betti_ld_test(s, 300);
  ASSERT_EQ(rep.betti.size(), 3u);
  EXPECT_EQ(rep.betti[0].lengths, (LengthSet{2, 3}));
  EXPECT_EQ(rep.betti[1].lengths, (LengthSet{4, 5, 7}));
  EXPECT_EQ(rep.betti[2].lengths, (LengthSet{2, 4, 5}));
  EXPECT_EQ(rep.search.minimum_ld, Rational(3, 5));
  EXPECT_EQ(s.length_set(Element::natural(202)), (LengthSet{4, 6, 7, 9}));
  EXPECT_FALSE(rep.attained_at_betti);
  EXPECT_EQ(betti_scan(s, 300, {kDefaultBudget, 3}), expected);
}

TEST(Catenary, MatchesThresholdOracle) {
  auto s = make_numerical({6, 9, 20});
  EXPECT_EQ(catenary_degree(s, Element::natural(60)), 7);
  for (std::int64_t x = 0; x <= 160; ++x) {
    if (!s.contains(x)) continue;
    auto fs = factorizations(s, Element::natural(x));
    EXPECT_EQ(catenary_degree(fs), oracle::catenary_threshold(exponents_of(fs))) << x;
  }
}

TEST(Catenary, SingleFactorizationIsZero) {
  auto s = make_numerical({6, 9, 20});
  EXPECT_EQ(catenary_degree(s, Element::natural(6)), 0);
  EXPECT_EQ(catenary_degree(s, Element::natural(0)), 0);
}

TEST(TameDegree, MatchesDefinition) {
  auto s = make_numerical({6, 9, 20});
  auto t = tame_degree(s, Element::natural(60), Factorization{0, 0, 1});
  EXPECT_EQ(t.degree, 10);
  EXPECT_FALSE(t.adjusted);
  auto fs = factorizations(s, Element::natural(60));
  EXPECT_EQ(t.degree, oracle::tame(exponents_of(fs), {0, 0, 1}));
  for (std::int64_t a : {18, 36, 54, 72, 90}) {
    auto za = factorizations(s, Element::natural(a));
    for (IntVector x : {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{2, 0, 0}}) {
      EXPECT_EQ(tame_degree(za, Factorization(x)).degree, oracle::tame(exponents_of(za), x)) << a;
    }
  }
}

TEST(TameDegree, OneIsReportedAsTwo) {
  // a hand-made set whose only move has distance 1
  FactorizationSet fs;
  fs.element = Element::natural(0);
  fs.factorizations = {Factorization{0, 1}, Factorization{1, 0}};
  auto r = tame_degree(fs, Factorization{1, 0});
  EXPECT_EQ(r.degree, 2);
  EXPECT_TRUE(r.adjusted);
  auto none = tame_degree(fs, Factorization{0, 0});
  EXPECT_EQ(none.degree, 0);
  EXPECT_FALSE(none.adjusted);
}

TEST(Asymptotic, SixNineTwentyPowers) {
  auto s = make_numerical({6, 9, 20});
  auto rep = asymptotic_ld(s, Element::natural(60), 10, Rational(1, 10));
  ASSERT_EQ(rep.terms.size(), 10u);
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto& term = rep.terms[static_cast<std::size_t>(n - 1)];
    EXPECT_EQ(term.n, n);
    ASSERT_TRUE(term.ld.has_value());
    EXPECT_EQ(*term.ld, Rational(7 * n - 3, 7 * n));
  }
  ASSERT_TRUE(rep.min_delta.has_value());
  EXPECT_EQ(*rep.min_delta, 1);
  EXPECT_EQ(*rep.predicted_limit, Rational(1));
  EXPECT_TRUE(rep.under_approximation);
}

TEST(Sandwich, BoundsAndCheck) {
  auto b = sandwich_bounds(10, 1, Rational(12));
  EXPECT_EQ(b.upper, Rational(1));
  EXPECT_EQ(b.lower, Rational(1) - Rational(24, 10));
  auto s = make_numerical({6, 9, 20});
  auto psi = default_psi(s, Element::natural(60), 1, 10);
  ASSERT_TRUE(psi.has_value());
  auto tame = measured_tame_constant(s, Element::natural(60), *psi, 4);
  EXPECT_GE(tame, 2);
  for (std::int64_t n = *psi; n <= 4; ++n) {
    EXPECT_TRUE(sandwich_check(s, Element::natural(60), n, 1, Rational(tame))) << n;
  }
}

TEST(LengthDensity, FourSevenAndT) {
  auto s = make_numerical({4, 7});
  auto t = make_affine({{4, 0, 0}, {7, 0, 0}, {0, 3, 0}, {0, 1, 1}, {0, 0, 3}});
  Rational previous(2);
  for (std::int64_t n = 1; n <= 8; ++n) {
    std::set<std::int64_t> ls;
    for (std::int64_t k = 4 * n; k <= 7 * n; k += 3) ls.insert(k);
    EXPECT_EQ(s.length_set(Element::natural(28 * n)), to_length_set(ls)) << n;
    auto lt = t.length_set(Element::vector({28 * n, 3, 3}));
    EXPECT_EQ(lt, to_length_set(oracle::sumset(ls, {2, 3}))) << n;
    auto ld = *length_density(lt);
    // (2n+2) lengths spanning 3n+1
    EXPECT_EQ(ld, Rational(2 * n + 1, 3 * n + 1)) << n;
    EXPECT_LT(ld, previous);
    previous = ld;
  }
}
