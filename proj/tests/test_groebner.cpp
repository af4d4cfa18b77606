#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"

namespace symcon {
namespace {

using test::poly;
using test::polys;

const RingPtr R2 = test::ring({"x", "y"});
const RingPtr R3 = test::ring({"x", "y", "z"});
const MonomialOrder kLex = MonomialOrder::lex();
const MonomialOrder kGrevlex = MonomialOrder::grevlex();

TEST(NormalForm, DividesOutLeadingTerms) {
  const auto r = normal_form(poly(R2, "x^2 + y"), polys(R2, {"x"}), kLex);
  EXPECT_EQ(r.remainder, poly(R2, "y"));
  EXPECT_EQ(r.quotients.at(0), poly(R2, "x"));
}

TEST(NormalForm, BasisElementReducesToZero) {
  const auto basis = polys(R2, {"x*y - 1", "y^2 - 1"}, kLex);
  for (const auto& g : basis) EXPECT_TRUE(normal_form(g, basis, kLex).remainder.is_zero());
}

TEST(NormalForm, TextbookDivision) {
  const auto f = poly(R2, "x^2*y + x*y^2 + y^2", kLex);
  const auto basis = polys(R2, {"x*y - 1", "y^2 - 1"}, kLex);
  const auto r = normal_form(f, basis, kLex);
  // Hand division: f = (x + y)(xy - 1) + 1*(y^2 - 1) + (x + y + 1).
  const auto hand = f - poly(R2, "x + y", kLex) * basis[0] - basis[1];
  EXPECT_EQ(hand, poly(R2, "x + y + 1"));
  EXPECT_EQ(r.remainder, hand);
  EXPECT_EQ(r.quotients[0], poly(R2, "x + y"));
  EXPECT_EQ(r.quotients[1], poly(R2, "1"));
}

TEST(NormalForm, QuotientsReconstructDividend) {
  test::Random rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ord = trial % 2 ? kLex : kGrevlex;
    const auto f = rng.polynomial(R3, 5, 6, ord);
    std::vector<Polynomial> basis;
    for (int k = 0; k < 3; ++k) basis.push_back(rng.nonzero_polynomial(R3, 3, 3, ord));
    const auto r = normal_form(f, basis, ord);
    Polynomial sum = r.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i) sum += r.quotients[i] * basis[i];
    ASSERT_EQ(sum, f);
    for (const auto& t : r.remainder.terms())
      for (const auto& g : basis) ASSERT_FALSE(g.leading_monomial().divides(t.monomial));
  }
}

TEST(SPolynomial, Examples) {
  EXPECT_TRUE(s_polynomial(poly(R2, "x^2"), poly(R2, "x*y"), kLex).is_zero());
  EXPECT_EQ(s_polynomial(poly(R2, "x - y", kLex), poly(R2, "y^2 - y", kLex), kLex),
            poly(R2, "x*y - y^3"));
  const auto f = poly(R3, "x^2*z - 3*y + 1/2");
  EXPECT_TRUE(s_polynomial(f, f, kGrevlex).is_zero());
  EXPECT_THROW(s_polynomial(f, Polynomial(R3), kGrevlex), std::invalid_argument);
}

TEST(Buchberger, MonomialIdealIsAlreadyReduced) {
  const auto gb = buchberger(polys(R2, {"x^2", "x*y"}), kGrevlex);
  EXPECT_EQ(test::strings(gb.elements()), (std::vector<std::string>{"x*y", "x^2"}));
}

TEST(Buchberger, TwoPointIdealLex) {
  const auto gens = polys(R2, {"x - y", "y^2 - y"}, kLex);
  const auto gb = buchberger(gens, kLex);
  EXPECT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.elements()[0], gens[1]);
  EXPECT_EQ(gb.elements()[1], gens[0]);
  EXPECT_TRUE(is_reduced_basis(gb));
  EXPECT_TRUE(is_reduced_basis(gens, kLex));
}

TEST(Buchberger, MakesMonic) {
  const auto gb = buchberger(polys(R2, {"2*x"}), kGrevlex);
  EXPECT_EQ(test::strings(gb.elements()), (std::vector<std::string>{"x"}));
}

TEST(Buchberger, UnitAndErrors) {
  const auto gb = buchberger(polys(R2, {"x*y - 1", "x"}), kGrevlex);
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(test::strings(gb.elements()), (std::vector<std::string>{"1"}));
  EXPECT_THROW(buchberger(std::vector<Polynomial>{}, kGrevlex), std::invalid_argument);
  EXPECT_THROW(buchberger(std::vector<Polynomial>{Polynomial(R2)}, kGrevlex), std::invalid_argument);
}

TEST(Buchberger, CircleAndLine) {
  const auto gb = buchberger(polys(R2, {"x^2 + y^2 - 1", "x - y"}), kLex);
  EXPECT_EQ(test::strings(gb.elements()), (std::vector<std::string>{"y^2 - 1/2", "x - y"}));
}

TEST(Buchberger, TwistedCubicLex) {
  const auto gb = buchberger(polys(R3, {"y - x^2", "z - x^3"}), kLex);
  EXPECT_EQ(test::strings(gb.elements()),
            (std::vector<std::string>{"y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"}));
}

TEST(IsReducedBasis, DetectsViolations) {
  EXPECT_FALSE(is_reduced_basis(polys(R2, {"x + y", "x"}, kLex), kLex));
  EXPECT_FALSE(is_reduced_basis(polys(R2, {"2*x"}, kLex), kLex));
  EXPECT_FALSE(is_reduced_basis(polys(R2, {"x - y^2", "y^2"}, kLex), kLex));
  // Not a Groebner basis: S(x*y - 1, y^2 - x) does not reduce to 0.
  EXPECT_FALSE(is_reduced_basis(polys(R2, {"x*y - 1", "y^2 - x"}, kGrevlex), kGrevlex));
}

std::vector<std::vector<Polynomial>> sample_ideals(test::Random& rng) {
  std::vector<std::vector<Polynomial>> out{
      polys(R3, {"x*y - z", "y*z - x", "x*z - y"}),
      polys(R3, {"x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"}),
      polys(R3, {"x*y", "x*z", "y*z"}),
      polys(R2, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}),
  };
  while (out.size() < 10) {
    const RingPtr& r = out.size() % 2 ? R2 : R3;
    std::vector<Polynomial> gens;
    const int count = rng.uniform(2, 3);
    for (int k = 0; k < count; ++k) gens.push_back(rng.nonzero_polynomial(r, 2, 3));
    out.push_back(std::move(gens));
  }
  return out;
}

TEST(GroebnerProperty, UniqueUnderGeneratorShuffles) {
  test::Random rng(11);
  for (const auto& gens : sample_ideals(rng)) {
    for (const auto& ord : {kGrevlex, kLex}) {
      const auto reference = buchberger(gens, ord);
      ASSERT_TRUE(is_reduced_basis(reference));
      for (int s = 0; s < 20; ++s) {
        auto shuffled = gens;
        rng.shuffle(shuffled);
        for (auto& g : shuffled) g = g.scaled(rng.coefficient());
        ASSERT_EQ(buchberger(shuffled, ord), reference) << ord.name();
      }
    }
  }
}

TEST(GroebnerProperty, SPairsReduceToZero) {
  test::Random rng(12);
  for (const auto& gens : sample_ideals(rng)) {
    for (const auto& ord : {kGrevlex, kLex, MonomialOrder::elimination(1)}) {
      const auto gb = buchberger(gens, ord);
      const auto& el = gb.elements();
      for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
          ASSERT_TRUE(normal_form(s_polynomial(el[i], el[j], ord), el, ord).remainder.is_zero());
      for (const auto& g : gens) ASSERT_TRUE(gb.contains(g));
    }
  }
}

TEST(GroebnerProperty, BasesUnderDifferentOrdersGenerateTheSameIdeal) {
  test::Random rng(13);
  for (const auto& gens : sample_ideals(rng)) {
    const auto a = buchberger(gens, kGrevlex);
    const auto b = buchberger(gens, kLex);
    for (const auto& g : a.elements()) ASSERT_TRUE(b.contains(g));
    for (const auto& g : b.elements()) ASSERT_TRUE(a.contains(g));
  }
}

TEST(GroebnerProperty, CombinationsOfGeneratorsAreMembers) {
  test::Random rng(14);
  for (const auto& gens : sample_ideals(rng)) {
    const auto gb = buchberger(gens, kGrevlex);
    for (int trial = 0; trial < 20; ++trial) {
      Polynomial f(gens.front().ring());
      for (const auto& g : gens) f += rng.polynomial(g.ring(), 2, 3) * g;
      ASSERT_TRUE(gb.contains(f));
      ASSERT_TRUE(gb.reduce(f).is_zero());
    }
  }
}

TEST(GroebnerProperty, NormalFormIsLinear) {
  test::Random rng(15);
  for (const auto& gens : sample_ideals(rng)) {
    const auto gb = buchberger(gens, kGrevlex);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = rng.polynomial(gens.front().ring(), 4, 5);
      const auto g = rng.polynomial(gens.front().ring(), 4, 5);
      const Rational c = rng.coefficient();
      ASSERT_EQ(gb.reduce(f + g), gb.reduce(f) + gb.reduce(g));
      ASSERT_EQ(gb.reduce(f.scaled(c)), gb.reduce(f).scaled(c));
      // The normal form is a canonical representative of f + I.
      ASSERT_EQ(gb.reduce(gb.reduce(f)), gb.reduce(f));
    }
  }
}

}  // namespace
}  // namespace symcon
