#include "jacobi/basis.hpp"
#include "jacobi/canonical.hpp"
#include "jacobi/error.hpp"
#include "jacobi/maps.hpp"
#include "jacobi/series.hpp"

#include "oracle/bernoulli.hpp"

#include <gtest/gtest.h>

using namespace jacobi;

TEST(Chi, StrutIsOneChord)
{
    EXPECT_EQ(chi(DiagramVector::of(strut())), DiagramVector::of(one_chord()));
}

TEST(Chi, ClosedDiagramsRideAlong)
{
    const auto x = chi(DiagramVector::of(theta()));
    ASSERT_EQ(x.size(), 1u);
    EXPECT_EQ(x.begin()->first.grading(), (Grading{2, 0, 0}));
}

TEST(Chi, AveragesOverOrders)
{
    // Two struts: 3 pairings of 4 circle points, 1/3 of them crossed.
    const auto x = chi(DiagramVector::of(juxtapose(strut(), strut())));
    Rational sum;
    for (const auto& [d, c] : x)
        sum += c;
    EXPECT_EQ(sum, 1);
    EXPECT_EQ(x.size(), 2u);
}

TEST(Chi, IsLinear)
{
    const auto a = DiagramVector::of(wheel(2));
    const auto b = DiagramVector::of(juxtapose(theta(), strut()));
    EXPECT_EQ(chi(Rational(2) * a + Rational(-3, 7) * b), Rational(2) * chi(a) + Rational(-3, 7) * chi(b));
}

TEST(Closure, StrutAndWheel)
{
    const auto loop = closure(DiagramVector::of(strut()));
    ASSERT_EQ(loop.size(), 1u);
    EXPECT_EQ(loop.begin()->first.free_loops, 1);
    const auto c = closure(DiagramVector::of(wheel(2)));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.begin()->first, theta());
    EXPECT_EQ(c.begin()->second * c.begin()->second, 1);
}

TEST(Closure, OddLegsVanish)
{
    for (int v : {3, 5}) {
        const auto ds = enumerate_diagrams(Space::B, {v, 1, 0});
        for (const auto& d : ds)
            EXPECT_TRUE(closure(DiagramVector::of(d)).is_zero());
    }
    EXPECT_EQ(closure(DiagramVector::of(theta())), DiagramVector::of(theta()));
}

TEST(Cap, EmptyIsIdentityAndStrutOnStrut)
{
    const auto w = DiagramVector::of(wheel(4));
    EXPECT_EQ(cap(DiagramVector::of(empty_diagram()), w), w);
    const auto s = DiagramVector::of(strut());
    const auto ss = cap(s, s);
    ASSERT_EQ(ss.size(), 1u);
    EXPECT_EQ(ss.begin()->first.free_loops, 1);
    EXPECT_EQ(ss.begin()->second, 2);
    EXPECT_TRUE(cap(DiagramVector::of(wheel(4)), s).is_zero());
}

TEST(Cap, StrutCapReducesLegsByTwo)
{
    const auto x = cap(DiagramVector::of(strut()), DiagramVector::of(wheel(4)));
    for (const auto& [d, c] : x)
        EXPECT_EQ(d.grading(), (Grading{4, 2, 0}));
}

TEST(Closure, MatchesFullCapOnEvenLegs)
{
    // For a diagram D with two legs, strut cap D pairs its legs in both orders.
    const auto w = DiagramVector::of(wheel(2));
    EXPECT_EQ(cap(DiagramVector::of(strut()), w), Rational(2) * closure(w));
}

TEST(Wheel, Shape)
{
    const Diagram w = wheel(4);
    EXPECT_EQ(w.grading(), (Grading{4, 4, 0}));
    EXPECT_NO_THROW(check(w));
    EXPECT_THROW(wheel(3), Error);
    EXPECT_THROW(wheel(0), Error);
}

TEST(Omega, Coefficients)
{
    const auto o = omega(4);
    ASSERT_EQ(o.coefficients.size(), 2u);
    EXPECT_EQ(o.coefficients[0], Rational(1, 48));
    EXPECT_EQ(o.coefficients[1], Rational(-1, 5760));
    EXPECT_EQ(o.value.coefficient(empty_diagram()), 1);
    const auto w2 = canonicalize(wheel(2));
    EXPECT_EQ(o.value.coefficient(w2.diagram), Rational(w2.sign, 48));
    for (const auto& [d, c] : o.value)
        EXPECT_LE(d.internal.size(), 4u);
}

TEST(ExpTruncated, RejectsConstantTerms)
{
    EXPECT_THROW(exp_truncated(DiagramVector::of(empty_diagram()), 4), Error);
    EXPECT_THROW(exp_truncated(DiagramVector::of(strut()), 4), Error);
    const auto e = exp_truncated(DiagramVector::of(theta()), 4);
    EXPECT_EQ(e.coefficient(juxtapose(theta(), theta())), Rational(1, 2));
}

TEST(Series, CoefficientsMatchBernoulliRecursion)
{
    for (int i = 1; i <= 6; ++i)
        EXPECT_EQ(bernoulli_coeff(i), oracle::wheel_coefficient(i)) << i;
    EXPECT_EQ(oracle::wheel_coefficient(1), Rational(1, 48));
    EXPECT_EQ(oracle::wheel_coefficient(2), Rational(-1, 5760));
}

TEST(Series, LogOfProduct)
{
    const auto s = sinhc_half(10);
    const auto l = log(s * s);
    const auto ls = log(s);
    for (int k = 0; k < 9; ++k)
        EXPECT_EQ(l[k], 2 * ls[k]);
}

TEST(Wheeling, RequiredPairs)
{
    BasisStore store;
    const auto e = DiagramVector::of(empty_diagram());
    const auto s = DiagramVector::of(strut());
    const auto w2 = DiagramVector::of(wheel(2));
    EXPECT_TRUE(verify_wheeling(e, e, store));
    EXPECT_TRUE(verify_wheeling(s, s, store));
    EXPECT_TRUE(verify_wheeling(w2, s, store));
}

TEST(Wheeling, PlainChiIsNotMultiplicative)
{
    // Without Omega the products already differ on two struts.
    BasisStore store;
    const auto s = DiagramVector::of(strut());
    EXPECT_FALSE(equal_mod_relations(chi(disjoint_union(s, s)), connect_sum(chi(s), chi(s)), store));
}
