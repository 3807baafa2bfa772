#include <gtest/gtest.h>

#include "convert.hpp"
#include "lendens/lendens.hpp"
#include "oracles.hpp"

using namespace lendens;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(LengthSetBasics, DeltasAndInterval) {
  LengthSet ls{3, 7, 8, 9, 10};
  EXPECT_EQ(ls.deltas(), (std::vector<std::int64_t>{1, 4}));
  EXPECT_FALSE(ls.is_interval());
  EXPECT_TRUE((LengthSet{4, 5, 6}).is_interval());
  EXPECT_EQ(LengthSet::from_values({5, 2, 5, 3}), (LengthSet{2, 3, 5}));
  EXPECT_EQ(sumset(LengthSet{0, 2}, LengthSet{1, 5}), (LengthSet{1, 3, 5, 7}));
}

TEST(Numerical, MinimizesGenerators) {
  auto s = make_numerical({9, 6, 20, 12, 15, 6});
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{6, 9, 20}));
  EXPECT_EQ(s.describe(), "<6,9,20>");
}

TEST(Numerical, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_numerical({}); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(code_of([] { make_numerical({4, 6}); }), ErrorCode::kNonCoprime);
  EXPECT_EQ(code_of([] { make_numerical({0, 3}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { make_numerical({-2, 3}); }), ErrorCode::kInvalidArgument);
}

TEST(Numerical, MembershipMatchesGaps) {
  auto s = make_numerical({6, 9, 20});
  // Frobenius number of <6,9,20> is 43
  EXPECT_FALSE(s.contains(std::int64_t{43}));
  EXPECT_TRUE(s.contains(std::int64_t{44}));
  for (std::int64_t x = 0; x <= 120; ++x) {
    bool brute = !oracle::numerical_factorizations({6, 9, 20}, x).empty();
    EXPECT_EQ(s.contains(x), brute) << x;
  }
}

TEST(Numerical, FactorizationsMatchBruteForce) {
  auto s = make_numerical({6, 9, 20});
  for (std::int64_t x : {0, 6, 18, 60, 120, 181}) {
    auto fs = s.factorizations(Element::natural(x), kDefaultBudget);
    EXPECT_TRUE(fs.complete);
    EXPECT_EQ(exponents_of(fs), oracle::numerical_factorizations({6, 9, 20}, x)) << x;
  }
  auto fs = s.factorizations(Element::natural(60), kDefaultBudget);
  EXPECT_EQ(fs.size(), 5u);
}

TEST(Numerical, NonMemberThrows) {
  auto s = make_numerical({6, 9, 20});
  EXPECT_EQ(code_of([&] { s.factorizations(Element::natural(43), kDefaultBudget); }),
            ErrorCode::kNotInMonoid);
  EXPECT_EQ(code_of([&] { factorizations(s, Element::vector({1})); }), ErrorCode::kTagMismatch);
}

TEST(Numerical, LengthTableMatchesBruteForce) {
  auto s = make_numerical({5, 8, 11});
  auto table = s.length_table(150);
  for (std::int64_t x = 0; x <= 150; ++x) {
    auto brute = oracle::lengths(oracle::numerical_factorizations({5, 8, 11}, x));
    EXPECT_EQ(table[static_cast<std::size_t>(x)], to_length_set(brute)) << x;
  }
}

TEST(Numerical, KnownLengthSet) {
  auto s = make_numerical({6, 9, 20});
  EXPECT_EQ(s.length_set(Element::natural(60)), (LengthSet{3, 7, 8, 9, 10}));
}

TEST(Affine, DropsRedundantGenerators) {
  auto a = make_affine({{1, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_EQ(a.generators(), (std::vector<IntVector>{{1, 0}, {0, 1}}));
}

TEST(Affine, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_affine({}); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(code_of([] { make_affine({{1, 0}, {1}}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { make_affine({{0, 0}, {1, 1}}); }), ErrorCode::kZeroVector);
}

TEST(Affine, FactorizationsMatchBruteForce) {
  std::vector<IntVector> gens{{4, 0, 0}, {7, 0, 0}, {0, 3, 0}, {0, 1, 1}, {0, 0, 3}};
  auto t = make_affine(gens);
  for (IntVector x : {IntVector{28, 3, 3}, IntVector{56, 3, 3}, IntVector{11, 4, 1}, IntVector{22, 3, 6}, IntVector{0, 0, 0}}) {
    auto fs = t.factorizations(Element::vector(x), kDefaultBudget);
    EXPECT_EQ(exponents_of(fs), oracle::vector_factorizations(gens, x));
    EXPECT_EQ(t.length_set(Element::vector(x)),
              to_length_set(oracle::lengths(oracle::vector_factorizations(gens, x))));
  }
  EXPECT_FALSE(t.contains(Element::vector({1, 0, 0})));
  EXPECT_FALSE(t.contains(Element::vector({0, 1, 0})));
  EXPECT_FALSE(t.contains(Element::vector({11, 2, 4})));
}

TEST(Affine, ScanIsOrderedByCoordinateSum) {
  auto t = make_affine({{2, 0}, {0, 3}, {1, 1}});
  auto elems = t.scan(6);
  std::int64_t last = -1;
  for (const auto& e : elems) {
    auto v = e.as_vector();
    std::int64_t sum = v[0] + v[1];
    EXPECT_LE(sum, 6);
    EXPECT_GE(sum, last);
    last = sum;
    EXPECT_FALSE(oracle::vector_factorizations({{2, 0}, {0, 3}, {1, 1}}, v).empty());
  }
  // brute count of members with coordinate sum <= 6
  std::size_t count = 0;
  for (std::int64_t a = 0; a <= 6; ++a) {
    for (std::int64_t b = 0; a + b <= 6; ++b) {
      if (!oracle::vector_factorizations({{2, 0}, {0, 3}, {1, 1}}, {a, b}).empty()) ++count;
    }
  }
  EXPECT_EQ(elems.size(), count);
}

TEST(Puiseux, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_puiseux({}); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(code_of([] { make_puiseux({Rational(0), Rational(1)}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { make_puiseux({Rational(1, 2), Rational(1), Rational(3, 2)}); }),
            ErrorCode::kNotAtomic);
}

TEST(Puiseux, FactorizationsMatchBruteForce) {
  std::vector<Rational> atoms{Rational(4, 3), Rational(8, 5), Rational(800, 1201)};
  auto p = make_puiseux(atoms);
  std::vector<oracle::Frac> fr{{4, 3}, {8, 5}, {800, 1201}};
  for (std::int64_t n : {1, 2, 4, 6, 8, 12}) {
    Rational x(8 * n);
    auto brute = oracle::rational_factorizations(fr, {8 * n, 1});
    auto fs = p.factorizations(Element::rational(x), kDefaultBudget);
    EXPECT_EQ(exponents_of(fs), brute) << n;
    EXPECT_EQ(p.length_set(Element::rational(x)), to_length_set(oracle::lengths(brute))) << n;
  }
}

TEST(Puiseux, LengthSetAtEightHundred) {
  std::vector<Rational> atoms{Rational(4, 3), Rational(8, 5), Rational(800, 1201)};
  auto p = make_puiseux(atoms);
  auto brute = oracle::lengths(oracle::rational_factorizations({{4, 3}, {8, 5}, {800, 1201}}, {800, 1}));
  auto ls = p.length_set(Element::rational(Rational(800)));
  EXPECT_EQ(ls, to_length_set(brute));
  EXPECT_EQ(ls.size(), 102u);
  EXPECT_EQ(ls.min(), 500);
  EXPECT_EQ(ls.max(), 1201);
}

TEST(Puiseux, ForcedResidues) {
  auto p = make_puiseux({Rational(4, 3), Rational(8, 5), Rational(800, 1201)});
  EXPECT_EQ(p.clearing_denominator(), 3 * 5 * 1201);
  auto res = p.forced_residues(Rational(8));
  ASSERT_EQ(res.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(res[i].has_value());
  }
  // every factorization of 8 obeys the forced residues
  for (const auto& z : oracle::rational_factorizations({{4, 3}, {8, 5}, {800, 1201}}, {8, 1})) {
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(z[i] % res[i]->second, res[i]->first);
    }
  }
  EXPECT_FALSE(p.contains(Element::rational(Rational(1, 7))));
}

TEST(Presentation, GradingIsConstantOnRelations) {
  auto m = make_presentation(3, {{{3, 0, 0}, {0, 4, 0}}, {{0, 4, 0}, {0, 0, 6}}});
  EXPECT_EQ(m.grading(), (IntVector{4, 3, 2}));
  for (const auto& r : m.relations()) EXPECT_EQ(m.degree(r.left), m.degree(r.right));
  EXPECT_EQ(m.describe(), "<a1,a2,a3 | a1^3=a2^4, a2^4=a3^6>");
}

TEST(Presentation, RejectsBadRelations) {
  EXPECT_EQ(code_of([] { make_presentation(0, {}); }), ErrorCode::kEmptyGenerators);
  EXPECT_EQ(code_of([] { make_presentation(2, {{{1, 0}, {0, 1, 0}}}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { make_presentation(2, {{{0, 0}, {0, 1}}}); }),
            ErrorCode::kMalformedRelation);
  EXPECT_EQ(code_of([] { make_presentation(2, {{{1, 1}, {1, 1}}}); }),
            ErrorCode::kMalformedRelation);
  EXPECT_EQ(code_of([] { make_presentation(2, {{{2, 0}, {0, 1}}, {{0, 2}, {1, 0}}}); }),
            ErrorCode::kNoPositiveGrading);
}

TEST(Presentation, WordsAndCanonicalForms) {
  auto m = make_presentation(3, {{{3, 0, 0}, {0, 4, 0}}, {{0, 4, 0}, {0, 0, 6}}});
  auto w = m.parse_word("a1^3*a2");
  EXPECT_EQ(w.as_vector(), (IntVector{3, 1, 0}));
  EXPECT_EQ(m.format(w), "a1^3*a2");
  EXPECT_EQ(m.format(m.identity()), "1");
  EXPECT_EQ(m.parse_word("(0,0,6)").as_vector(), (IntVector{0, 0, 6}));
  EXPECT_TRUE(m.equal(m.parse_word("a1^3"), m.parse_word("a3^6")));
  EXPECT_FALSE(m.equal(m.parse_word("a1^3"), m.parse_word("a1*a2^3")));
  EXPECT_EQ(m.canonical(m.parse_word("a1^3")).as_vector(), (IntVector{0, 0, 6}));
  EXPECT_THROW(m.parse_word("b7"), Error);
}

TEST(Presentation, FactorizationsMatchIndependentClosure) {
  std::vector<std::pair<oracle::Vec, oracle::Vec>> rels{{{3, 0, 0}, {0, 4, 0}}, {{0, 4, 0}, {0, 0, 6}}};
  auto m = make_presentation(3, {{{3, 0, 0}, {0, 4, 0}}, {{0, 4, 0}, {0, 0, 6}}});
  for (IntVector w : {IntVector{3, 0, 0}, IntVector{6, 1, 0}, IntVector{2, 2, 2}}) {
    auto cls = oracle::rewrite_class(w, rels);
    auto fs = m.factorizations(Element::vector(w), kDefaultBudget);
    EXPECT_EQ(exponents_of(fs), std::vector<oracle::Vec>(cls.begin(), cls.end()));
  }
  EXPECT_FALSE(m.find_cancellativity_violation(8).has_value());
}

TEST(DirectSum, LengthsAreSumsets) {
  auto ns = std::make_shared<NumericalSemigroup>(make_numerical({4, 7}));
  auto m = direct_sum({ns, ns});
  Element x = Element::tuple({Element::natural(28), Element::natural(56)});
  EXPECT_TRUE(m->contains(x));
  auto expected = sumset(ns->length_set(Element::natural(28)), ns->length_set(Element::natural(56)));
  EXPECT_EQ(m->length_set(x), expected);
  EXPECT_EQ(length_set_by_enumeration(*m, x), expected);
  EXPECT_EQ(m->atom_count(), 4u);
  EXPECT_EQ(m->format(x), "[28, 56]");
}

TEST(DirectSum, SingleSummandIsUnchanged) {
  MonoidPtr ns = std::make_shared<NumericalSemigroup>(make_numerical({4, 7}));
  EXPECT_EQ(direct_sum({ns}).get(), ns.get());
  EXPECT_EQ(code_of([] { direct_sum({}); }), ErrorCode::kEmptyGenerators);
}
