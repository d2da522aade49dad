#include <gtest/gtest.h>

#include <random>

#include "reeswalk/groebner.hpp"
#include "reeswalk/rees.hpp"
#include "support/generators.hpp"

using namespace reeswalk;

namespace {

SymMonomial sm(std::initializer_list<std::pair<const std::string, unsigned>> x,
               std::initializer_list<std::pair<const FacetIndex, unsigned>> t = {}) {
  return SymMonomial(Monomial(Monomial::Exponents(x)), SymMonomial::TExponents(t));
}

SymPolynomial binomial(const SymMonomial& a, const SymMonomial& b) {
  SymPolynomial p(a, Rational(1));
  p.add_term(b, Rational(-1));
  return p;
}

std::vector<std::string> rendered(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(g.str());
  return out;
}

}  // namespace

TEST(Order, BlockStructure) {
  // T1 > T2 > a > b; any T beats any vertex at equal degree.
  EXPECT_GT(compare_monomials(sm({}, {{1, 1}}), sm({}, {{2, 1}})), 0);
  EXPECT_GT(compare_monomials(sm({}, {{2, 1}}), sm({{"a", 1}})), 0);
  EXPECT_GT(compare_monomials(sm({{"a", 1}}), sm({{"b", 1}})), 0);
  EXPECT_GT(compare_monomials(sm({{"a", 2}}), sm({}, {{1, 1}})), 0);  // degree first
  EXPECT_EQ(compare_monomials(sm({{"a", 1}}, {{1, 1}}), sm({{"a", 1}}, {{1, 1}})), 0);
  // degrevlex, not lex: a*c < b^2 since c is the smallest variable present.
  EXPECT_LT(compare_monomials(sm({{"a", 1}, {"c", 1}}), sm({{"b", 2}})), 0);
}

TEST(Polynomial, ArithmeticAndRendering) {
  const auto p = binomial(sm({{"x3", 1}}, {{1, 1}}), sm({{"x1", 1}}, {{2, 1}}));
  EXPECT_EQ(p.str(), "-x1*T2 + x3*T1");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).str(), "0");
  EXPECT_EQ((Rational(2) * p).str(), "-2*x1*T2 + 2*x3*T1");
  EXPECT_EQ((-p).str(), "x1*T2 - x3*T1");
  const auto sq = p * p;
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient(sm({{"x1", 1}, {"x3", 1}}, {{1, 1}, {2, 1}})), Rational(-2));
  EXPECT_EQ(SymPolynomial(sm({}), Rational(1, 2)).str(), "1/2");
}

TEST(Polynomial, ExpandTaylor) {
  const auto fig = testsupport::hexagon();
  EXPECT_EQ(expand_taylor(taylor_binomial(fig, IndexTuple{1, 3, 5}, IndexTuple{2, 4, 6})).str(),
            "-a3*x1*T2*T4*T6 + a1*x3*T1*T3*T5");
  const auto path = Complex::validate({{"x1", "x2"}, {"x2", "x3"}});
  EXPECT_EQ(expand_taylor(taylor_binomial(path, IndexTuple{1}, IndexTuple{2})).str(), "-x1*T2 + x3*T1");
  EXPECT_TRUE(expand_taylor(taylor_binomial(fig, IndexTuple{1, 2}, IndexTuple{1, 2})).is_zero());
}

// x4x8·T1T3 − x1x6·T2T4 as an explicit combination of three linear relations.
TEST(Polynomial, ExplicitCombinationIdentity) {
  const auto lhs = binomial(sm({{"x4", 1}, {"x8", 1}}, {{1, 1}, {3, 1}}), sm({{"x1", 1}, {"x6", 1}}, {{2, 1}, {4, 1}}));
  const auto rhs = sm({{"x8", 1}}, {{3, 1}}) * binomial(sm({{"x4", 1}}, {{1, 1}}), sm({{"x2", 1}}, {{5, 1}})) +
                   sm({}, {{5, 1}}) * binomial(sm({{"x2", 1}, {"x8", 1}}, {{3, 1}}), sm({{"x5", 1}, {"x6", 1}}, {{4, 1}})) +
                   sm({{"x6", 1}}, {{4, 1}}) * binomial(sm({{"x5", 1}}, {{5, 1}}), sm({{"x1", 1}}, {{2, 1}}));
  EXPECT_TRUE(lhs == rhs);
  EXPECT_TRUE((lhs - rhs).is_zero());
}

TEST(Groebner, SingleGenerator) {
  const auto p = binomial(sm({{"x3", 1}}, {{1, 1}}), sm({{"x1", 1}}, {{2, 1}}));
  const auto gb = groebner({p});
  EXPECT_EQ(rendered(gb), (std::vector<std::string>{"x1*T2 - x3*T1"}));
  EXPECT_TRUE(normal_form(p, gb).is_zero());
  EXPECT_TRUE(groebner_self_check(gb));
}

// Reference basis from an independent computer-algebra run.
TEST(Groebner, TwoGeneratorToy) {
  const auto f = binomial(sm({{"x", 1}}, {{1, 1}}), sm({{"y", 1}}, {{2, 1}}));
  const auto g = binomial(sm({{"y", 1}}, {{1, 1}}), sm({{"x", 1}}, {{2, 1}}));
  const auto gb = groebner({f, g});
  EXPECT_EQ(rendered(gb), (std::vector<std::string>{"x*T2 - y*T1", "x*T1 - y*T2", "y*T1^2 - y*T2^2"}));
  EXPECT_TRUE(groebner_self_check(gb));
}

TEST(Groebner, TriangleLinearRelations) {
  const auto tri = Complex::validate({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const auto j1 = js_generators(tri, 1);
  ASSERT_EQ(j1.size(), 3u);
  EXPECT_EQ(j1[0].str(), "-a*T2 + c*T1");
  EXPECT_EQ(j1[1].str(), "-b*T3 + c*T1");
  EXPECT_EQ(j1[2].str(), "a*T2 - b*T3");
  const auto gb = groebner(j1);
  EXPECT_EQ(rendered(gb), (std::vector<std::string>{"b*T3 - c*T1", "a*T2 - c*T1"}));
  EXPECT_TRUE(groebner_self_check(gb));
  const auto t = expand_taylor(taylor_binomial(tri, IndexTuple{1, 1}, IndexTuple{2, 3}));
  EXPECT_EQ(t.str(), "-a*b*T2*T3 + c^2*T1^2");
  EXPECT_TRUE(normal_form(t, gb).is_zero());
}

TEST(NormalForm, Basics) {
  const auto p = binomial(sm({{"x", 1}}, {{1, 1}}), sm({{"y", 1}}, {{2, 1}}));
  const auto gb = groebner({p});
  const SymPolynomial one(sm({}), Rational(1));
  EXPECT_EQ(normal_form(one, gb).str(), "1");
  EXPECT_THROW(normal_form(one, gb, "lex"), Error);
  // Variables outside the basis ring.
  const auto q = binomial(sm({{"z", 1}}, {{7, 1}}), sm({{"x", 1}}, {{1, 1}}));
  EXPECT_EQ(normal_form(q, gb).str(), normal_form(normal_form(q, gb), gb).str());
  EXPECT_TRUE(normal_form(SymPolynomial(), gb).is_zero());
  EXPECT_TRUE(groebner({SymPolynomial()}).generators().empty());
}

// Idempotent and linear on random combinations over random complexes.
TEST(NormalForm, IdempotentAndLinear) {
  std::mt19937 rng(61);
  for (int round = 0; round < 25; ++round) {
    const auto c = testsupport::random_complex(rng, 4, 6, 3);
    const auto j1 = js_generators(c, 1);
    if (j1.empty()) continue;
    const auto gb = groebner(j1);
    EXPECT_TRUE(groebner_self_check(gb));
    const auto j2 = js_generators(c, 2);
    for (std::size_t k = 0; k + 1 < j2.size() && k < 6; ++k) {
      const auto& a = j2[k];
      const auto& b = j2[k + 1];
      const auto na = normal_form(a, gb);
      const auto nb = normal_form(b, gb);
      EXPECT_TRUE(normal_form(na, gb) == na);
      const Rational r(3, 2);
      EXPECT_TRUE(normal_form(a + r * b, gb) == na + r * nb);
    }
  }
}

TEST(Groebner, ReducedBasisProperty) {
  const auto c5 = testsupport::cycle_graph(5);
  const auto gb = groebner(js_generators(c5, 1));
  const auto& g = gb.generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g[a].leading_coefficient(), Rational(1));
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      bool divides = la.x_part().divides(lb.x_part());
      for (auto [i, e] : la.t_part()) {
        auto it = lb.t_part().find(i);
        if (it == lb.t_part().end() || it->second < e) divides = false;
      }
      EXPECT_FALSE(divides);
    }
  }
}

TEST(Groebner, ResourceCaps) {
  const auto c6 = testsupport::cycle_graph(6);
  GroebnerOptions tiny;
  tiny.max_pairs = 3;
  EXPECT_THROW(groebner(js_generators(c6, 1), tiny), Error);
  GroebnerOptions low;
  low.max_degree = 1;
  try {
    groebner(js_generators(c6, 1), low);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
}

TEST(ReesImage, KernelSoundness) {
  std::mt19937 rng(67);
  for (int round = 0; round < 30; ++round) {
    const auto c = testsupport::random_complex(rng, 2 + round % 4, 6, 3);
    for (std::size_t s = 1; s <= 3; ++s) {
      for (const auto& p : js_generators(c, s)) EXPECT_TRUE(rees_image(c, p).is_zero());
    }
  }
  const auto path = Complex::validate({{"a", "b"}, {"b", "c"}});
  const auto image = rees_image(path, SymPolynomial(sm({}, {{1, 1}}), Rational(1)));
  EXPECT_EQ(image.str(), "a*b*T1");
}
