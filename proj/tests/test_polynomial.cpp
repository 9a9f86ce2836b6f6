#include <gtest/gtest.h>

#include <map>
#include <random>

#include "quadforms/polynomial.hpp"
#include "support.hpp"

using quadforms::Monomial;
using quadforms::Polynomial;
using quadforms::Rational;
using quadforms::VarSet;

namespace {

const VarSet& zvars() {
  static const VarSet v = VarSet::indexed("z", 3);
  return v;
}

Polynomial P(const char* text) { return quadforms::parse_polynomial(text, zvars()); }

}  // namespace

TEST(Polynomial, AddCancelsAndPrunes) {
  EXPECT_EQ(P("z1 + z2") + P("z1 - z2"), P("2*z1"));
  const Polynomial p = P("3*z1*z2 - 1/2");
  EXPECT_EQ(p + Polynomial(zvars()), p);
  const Polynomial zero = P("z1^2") + P("-z1^2");
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.term_count(), 0u);
}

TEST(Polynomial, MultipliesDistributively) {
  EXPECT_EQ(P("(z1 + z2)*(z1 - z2)"), P("z1^2 - z2^2"));
  EXPECT_EQ(P("z1^2") * P("z2*z3"), P("z1*z2") * P("z1*z3"));
}

TEST(Polynomial, SquareOfGeneralLinearForm) {
  const VarSet vars({"a1", "a2", "a3", "z1", "z2", "z3"});
  const Polynomial f = quadforms::parse_polynomial("a1*z1 + a2*z2 + a3*z3", vars);
  const Polynomial sq = f * f;
  EXPECT_EQ(sq.term_count(), 6u);
  int cross = 0;
  for (const auto& [m, c] : sq.terms()) {
    unsigned zs = 0;
    for (std::size_t i = 3; i < 6; ++i) zs += m[i] > 0;
    if (zs == 2) {
      EXPECT_EQ(c, Rational(2));
      ++cross;
    } else {
      EXPECT_EQ(c, Rational(1));
    }
  }
  EXPECT_EQ(cross, 3);
}

TEST(Polynomial, ProductTermBound) {
  std::mt19937_64 g(11);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = qtest::random_poly(g, zvars(), 5, 3);
    const Polynomial q = qtest::random_poly(g, zvars(), 4, 3);
    EXPECT_LE((p * q).term_count(), p.term_count() * q.term_count());
  }
}

TEST(Polynomial, Powers) {
  EXPECT_EQ(P("z1 + z2").pow(2), P("z1^2 + 2*z1*z2 + z2^2"));
  const Polynomial p = P("2*z1 - 1/3*z3 + 1");
  EXPECT_EQ(p.pow(0), P("1"));
  EXPECT_EQ(p.pow(1), p);
  EXPECT_EQ(p.pow(5), p * p * p * p * p);
}

TEST(Polynomial, MismatchedVarSetsAreRejected) {
  const VarSet other = VarSet::indexed("w", 3);
  EXPECT_THROW((void)(P("z1") + Polynomial::variable(other, "w1")), quadforms::VarSetMismatch);
  EXPECT_THROW((void)(P("z1") * Polynomial::variable(other, "w1")), quadforms::VarSetMismatch);
  // Equal name lists are the same ring even when built separately.
  EXPECT_NO_THROW((void)(P("z1") + Polynomial::variable(VarSet::indexed("z", 3), "z1")));
}

TEST(Polynomial, RendersCanonically) {
  EXPECT_EQ(P("z2 - 3/7*z1*z3 + 2*z1^2").str(), "2*z1^2 - 3/7*z1*z3 + z2");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("-z1").str(), "-z1");
  const Polynomial p = P("(z1 - 2*z2 + 1/2)^3");
  EXPECT_EQ(quadforms::parse_polynomial(p.str(), zvars()), p);
}

TEST(Polynomial, ParseErrors) {
  for (const char* text : {"z1 +", "z4", "(z1", "z1^", "z1 ** 2", "2z1", ""}) {
    EXPECT_THROW((void)P(text), quadforms::ParseError) << text;
  }
}

TEST(Polynomial, CoefficientExtraction) {
  EXPECT_EQ(quadforms::coeff_extract(P("(z1 + z2)^2"), quadforms::parse_power_product("z1*z2")),
            P("2"));
  EXPECT_TRUE(quadforms::coeff_extract(P("(z1 + z2)^2"), quadforms::parse_power_product("z3"))
                  .is_zero());
  // Coefficient of z3^2 z1 z2 in mu * f^2 is 2 mu a1 a2 when z3 is not traced through f.
  const VarSet vars({"mu", "a1", "a2", "a3", "z1", "z2", "z3"});
  const Polynomial f = quadforms::parse_polynomial("a1*z1 + a2*z2 + a3*z3", vars);
  const Polynomial mu_f2_z3 = quadforms::parse_polynomial("mu*z3^2", vars) * f * f;
  EXPECT_EQ(quadforms::coeff_extract(mu_f2_z3, quadforms::parse_power_product("z1*z2*z3^2")),
            quadforms::parse_polynomial("2*mu*a1*a2", vars));
}

TEST(Polynomial, FullPatternGivesConstant) {
  const Polynomial p = P("3*z1^2*z2 - z3");
  const Polynomial c = quadforms::coeff_extract(p, quadforms::parse_power_product("z1^2*z2*z3^0"));
  EXPECT_EQ(c, P("3"));
}

TEST(Polynomial, Substitution) {
  quadforms::ValueBindings cut{{"z3", Rational(0)}};
  EXPECT_EQ(quadforms::substitute(P("z1 + z2 + z3"), cut), P("z1 + z2"));
  quadforms::PolyBindings swap{{"z1", P("z2")}, {"z2", P("z1")}};
  EXPECT_EQ(quadforms::substitute(P("z1^2 + 2*z2"), swap), P("z2^2 + 2*z1"));
}

TEST(Polynomial, ExactDivision) {
  EXPECT_EQ(quadforms::exact_divide(P("z1^2 - z2^2"), P("z1 + z2")), P("z1 - z2"));
  EXPECT_THROW((void)quadforms::exact_divide(P("z1^2 + z2^2"), P("z1 + z2")),
               quadforms::InexactDivision);
  EXPECT_THROW((void)quadforms::exact_divide(P("z1"), P("0")), quadforms::DivisionByZero);
}

// Properties over seeded random polynomials.

TEST(PolynomialProperties, RingAxioms) {
  std::mt19937_64 g(2024);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = qtest::random_poly(g, zvars(), 4, 3);
    const Polynomial q = qtest::random_poly(g, zvars(), 4, 3);
    const Polynomial r = qtest::random_poly(g, zvars(), 3, 2);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(PolynomialProperties, HomogeneousProductsStayHomogeneous) {
  std::mt19937_64 g(7);
  for (int t = 0; t < 40; ++t) {
    const auto d1 = static_cast<unsigned>(qtest::draw(g, 0, 4));
    const auto d2 = static_cast<unsigned>(qtest::draw(g, 0, 4));
    const Polynomial p = qtest::random_homogeneous(g, zvars(), 4, d1);
    const Polynomial q = qtest::random_homogeneous(g, zvars(), 4, d2);
    if (p.is_zero() || q.is_zero()) continue;
    const Polynomial pq = p * q;
    ASSERT_TRUE(pq.is_homogeneous());
    EXPECT_EQ(*pq.degree(), d1 + d2);
  }
}

TEST(PolynomialProperties, ProductCoefficientsMatchConvolution) {
  std::mt19937_64 g(99);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = qtest::random_poly(g, zvars(), 4, 2);
    const Polynomial q = qtest::random_poly(g, zvars(), 4, 2);
    std::map<std::vector<quadforms::Exponent>, Rational> conv;
    for (const auto& [mp, cp] : p.terms()) {
      for (const auto& [mq, cq] : q.terms()) {
        std::vector<quadforms::Exponent> e(3);
        for (std::size_t i = 0; i < 3; ++i) e[i] = mp[i] + mq[i];
        conv[e] += cp * cq;
      }
    }
    const Polynomial pq = p * q;
    for (const auto& [e, c] : conv) {
      quadforms::PowerProduct pattern;
      for (std::size_t i = 0; i < 3; ++i) pattern.emplace_back(zvars().name(i), e[i]);
      EXPECT_EQ(quadforms::coeff_extract(pq, pattern), Polynomial::constant(zvars(), c));
    }
    std::size_t nonzero = 0;
    for (const auto& [e, c] : conv) nonzero += !c.is_zero();
    EXPECT_EQ(pq.term_count(), nonzero);
  }
}

TEST(PolynomialProperties, SubstitutionCommutesWithMultiplication) {
  std::mt19937_64 g(5);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = qtest::random_poly(g, zvars(), 4, 2);
    const Polynomial q = qtest::random_poly(g, zvars(), 4, 2);
    quadforms::PolyBindings b{{"z1", qtest::random_poly(g, zvars(), 2, 1)},
                              {"z3", Polynomial::constant(zvars(), qtest::draw_rational(g, 5))}};
    EXPECT_EQ(quadforms::substitute(p * q, b),
              quadforms::substitute(p, b) * quadforms::substitute(q, b));
  }
}

TEST(PolynomialProperties, EvaluationIsARingMap) {
  std::mt19937_64 g(8);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = qtest::random_poly(g, zvars(), 4, 3);
    const Polynomial q = qtest::random_poly(g, zvars(), 4, 3);
    const std::vector<Rational> pt = {qtest::draw_rational(g, 4), qtest::draw_rational(g, 4),
                                      qtest::draw_rational(g, 4)};
    EXPECT_EQ(quadforms::evaluate(p * q, pt), quadforms::evaluate(p, pt) * quadforms::evaluate(q, pt));
    EXPECT_EQ(quadforms::evaluate(p + q, pt), quadforms::evaluate(p, pt) + quadforms::evaluate(q, pt));
  }
}
