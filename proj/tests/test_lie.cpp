#include "jacobi/error.hpp"
#include "jacobi/lie.hpp"

#include <gtest/gtest.h>

using namespace jacobi;

TEST(CheckLie, BuiltinsPass)
{
    EXPECT_TRUE(check_lie(sl2()).ok);
    EXPECT_TRUE(check_lie(abelian(4)).ok);
    EXPECT_TRUE(check_representation(sl2(), sl2_fundamental()).ok);
    EXPECT_TRUE(check_representation(sl2(), adjoint_representation(sl2())).ok);
    EXPECT_TRUE(check_representation(abelian(2), trivial_representation(abelian(2))).ok);
}

TEST(CheckLie, PerturbedConstantBreaksJacobi)
{
    auto g = sl2();
    g.c[1][1][2] = 1; // [e, f] = h + e
    g.c[1][2][1] = -1;
    const auto r = check_lie(g);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.identity, "jacobi identity");
    EXPECT_NE(r.message().find("jacobi identity"), std::string::npos);
}

TEST(CheckLie, ReportsEachIdentity)
{
    auto asym = sl2();
    asym.c[1][0][1] = 5;
    EXPECT_EQ(check_lie(asym).identity, "antisymmetry");

    auto sym = sl2();
    sym.metric[0][1] = 1;
    EXPECT_EQ(check_lie(sym).identity, "metric symmetry");

    auto degenerate = sl2();
    degenerate.metric[0][0] = 0;
    EXPECT_EQ(check_lie(degenerate).identity, "metric nondegeneracy");

    auto noninvariant = sl2();
    noninvariant.metric[0][0] = 1;
    EXPECT_EQ(check_lie(noninvariant).identity, "metric invariance");
}

TEST(CheckLie, BadRepresentation)
{
    auto v = sl2_fundamental();
    v.action[1][0][1] = 2;
    EXPECT_EQ(check_representation(sl2(), v).identity, "representation homomorphism");
}

TEST(DeriveTensors, Sl2InverseMetric)
{
    const auto t = derive_tensors(sl2());
    EXPECT_EQ(t.c_up[0][0], Rational(1, 2));
    EXPECT_EQ(t.c_up[1][2], 1);
    EXPECT_EQ(t.c_up[2][1], 1);
    EXPECT_EQ(t.c_up[1][1], 0);
    const auto m = sl2().metric;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Rational s;
            for (int j = 0; j < 3; ++j)
                s += t.c_up[i][j] * m[j][k];
            EXPECT_EQ(s, i == k ? 1 : 0);
        }
}

TEST(DeriveTensors, FullyAntisymmetric)
{
    const auto t = derive_tensors(sl2());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                EXPECT_EQ(t.f_at(i, j, k), -t.f_at(j, i, k));
                EXPECT_EQ(t.f_at(i, j, k), t.f_at(j, k, i));
            }
    // f(e, f, h) = b(h, h) = 2
    EXPECT_EQ(t.f_at(1, 2, 0), 2);
}

TEST(DeriveTensors, AbelianAndSingular)
{
    const auto t = derive_tensors(abelian(3));
    for (const auto& x : t.f)
        EXPECT_EQ(x, 0);
    EXPECT_EQ(t.c_up[2][2], 1);
    auto g = abelian(2);
    g.metric[1][1] = 0;
    try {
        derive_tensors(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMetric);
    }
}

TEST(LieJson, RoundTripAndValidation)
{
    const LieData data = builtin_lie_data("sl2");
    const Json j = to_json(data);
    const LieData back = lie_data_from_json(parse_json(j.dump()));
    EXPECT_EQ(back.algebra.c, data.algebra.c);
    EXPECT_EQ(back.algebra.metric, data.algebra.metric);
    EXPECT_EQ(back.representation("fundamental").action, sl2_fundamental().action);
    EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(LieJson, RejectsFloatsAndBrokenAlgebras)
{
    Json j = to_json(builtin_lie_data("abelian:2"));
    j["metric"][0][0] = 1.0;
    try {
        lie_data_from_json(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
    }

    Json broken = to_json(builtin_lie_data("sl2"));
    broken["structure_constants"][1][1][2] = "1";
    broken["structure_constants"][1][2][1] = "-1";
    try {
        lie_data_from_json(broken);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LieValidation);
    }
}

TEST(LieJson, Builtins)
{
    EXPECT_EQ(builtin_lie_data("abelian:5").algebra.dim, 5);
    EXPECT_EQ(builtin_lie_data("abelian").algebra.dim, 1);
    EXPECT_THROW(builtin_lie_data("abelian:0"), Error);
    EXPECT_THROW(builtin_lie_data("e8"), Error);
    EXPECT_THROW(builtin_lie_data("sl2").representation("spin7"), Error);
}
