#include "jacobi/basis.hpp"
#include "jacobi/canonical.hpp"
#include "jacobi/error.hpp"
#include "jacobi/maps.hpp"
#include "jacobi/relations.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jacobi;

TEST(DiagramVector, FoldsSignsAndDropsZeros)
{
    DiagramVector x(Space::B);
    x.add(theta(), 2);
    x.add(reverse_vertex(theta(), 0), 2);
    EXPECT_TRUE(x.is_zero());
    x.add(testutil::tadpole(), 5);
    EXPECT_TRUE(x.is_zero());
    x.add(reverse_vertex(theta(), 1), 3);
    EXPECT_EQ(x.coefficient(theta()), -3);
}

TEST(DiagramVector, LinearOperations)
{
    const auto t = DiagramVector::of(theta());
    const auto s = DiagramVector::of(strut());
    const auto x = Rational(1, 2) * t + s;
    EXPECT_EQ(x - s, Rational(1, 2) * t);
    EXPECT_EQ((x + x).coefficient(theta()), 1);
    EXPECT_THROW(DiagramVector::of(theta()) + DiagramVector::of(one_chord()), Error);
}

TEST(DiagramVector, ByPieceAndTruncation)
{
    const auto x = DiagramVector::of(theta()) + DiagramVector::of(strut()) + DiagramVector::of(wheel(2));
    const auto parts = x.by_piece();
    EXPECT_EQ(parts.size(), 3u);
    EXPECT_EQ(x.truncated(0), DiagramVector::of(strut()));
}

TEST(Relations, IhxOnThetaLikeEdgesIsHomogeneous)
{
    for (const auto& d : enumerate_diagrams(Space::B, {4, 0, 0}))
        for (int h = 0; h < d.half_edge_count(); ++h) {
            const auto r = ihx_at(d, h);
            for (const auto& [term, c] : r)
                EXPECT_EQ(term.grading(), d.grading());
        }
}

TEST(Relations, StuChangesGradingByOneVertexSwap)
{
    // A diagram with an internal vertex next to the circle: the tripod.
    Diagram tripod;
    tripod.space = Space::A;
    tripod.internal = {{0, 1, 2}};
    tripod.skeleton = {3, 4, 5};
    tripod.pairing = {3, 4, 5, 0, 1, 2};
    const auto r = stu_at(tripod, 0);
    EXPECT_FALSE(r.is_zero());
    for (const auto& [term, c] : r)
        EXPECT_EQ(term.grading().total(), 4);
}

TEST(Basis, Dimensions)
{
    const std::vector<std::pair<Piece, int>> expected = {
        {Piece::of_a(0), 1}, {Piece::of_a(2), 2}, {Piece::of_a(4), 5}, {Piece::of_a(6), 10},
        {Piece::of_b(0, 2), 1}, {Piece::of_b(2, 0), 1}, {Piece::of_b(4, 0), 2}, {Piece::of_b(2, 2), 2},
        {Piece::of_b(6, 0), 3}, {Piece::of_b(1, 1), 0}, {Piece::of_b(1, 3), 0},
    };
    for (const auto& [piece, dim] : expected)
        EXPECT_EQ(compute_basis(piece).dimension(), dim) << to_string(piece);
}

TEST(Basis, ReduceIsIdentityOnBasisAndKillsRelations)
{
    const auto b = compute_basis(Piece::of_a(6));
    const auto basis = b.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto coords = reduce(DiagramVector::of(basis[i]), b);
        for (std::size_t j = 0; j < coords.size(); ++j)
            EXPECT_EQ(coords[j], i == j ? 1 : 0);
    }
    for (const auto& r : generate_relations(Piece::of_a(6)).generators)
        for (const auto& c : reduce(r, b))
            EXPECT_EQ(c, 0);
}

TEST(Basis, ReduceRejectsWrongPiece)
{
    const auto b = compute_basis(Piece::of_b(2, 0));
    try {
        reduce(DiagramVector::of(strut()), b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GradingMismatch);
    }
}

TEST(Basis, TripodVanishesInB)
{
    BasisStore store;
    Diagram y;
    y.internal = {{0, 1, 2}};
    y.legs = {3, 4, 5};
    y.pairing = {3, 4, 5, 0, 1, 2};
    EXPECT_TRUE(DiagramVector::of(y).is_zero());
}

TEST(Basis, ConnectSumIndependentOfCutPoints)
{
    BasisStore store;
    const auto a_diagrams = enumerate_piece(Piece::of_a(4));
    const Diagram& a = a_diagrams[3];
    const Diagram b = canonicalize(one_chord()).diagram;
    const auto reference = connect_sum_at(a, 0, b, 0);
    for (int i = 0; i < static_cast<int>(a.skeleton.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.skeleton.size()); ++j)
            EXPECT_TRUE(equal_mod_relations(connect_sum_at(a, i, b, j), reference, store)) << i << " " << j;
}

TEST(BasisStore, WarmAndColdCacheAgree)
{
    const auto dir = std::filesystem::temp_directory_path() / ("jacobi-test-cache-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const Piece piece = Piece::of_a(6);
    QuotientBasis cold;
    {
        BasisStore store(dir);
        cold = store.get(piece);
    }
    ASSERT_TRUE(std::filesystem::exists(BasisStore(dir).file_for(piece)));
    BasisStore warm_store(dir);
    const QuotientBasis& warm = warm_store.get(piece);
    EXPECT_EQ(warm.columns, cold.columns);
    EXPECT_EQ(warm.basis_columns, cold.basis_columns);
    EXPECT_EQ(warm.relations.rows(), cold.relations.rows());

    // A corrupted entry is recomputed, not trusted.
    {
        std::ofstream out(warm_store.file_for(piece));
        out << "garbage";
    }
    BasisStore again(dir);
    EXPECT_EQ(again.get(piece).basis_columns, cold.basis_columns);
    std::filesystem::remove_all(dir);
}

TEST(Elimination, RankOfDenseMatrix)
{
    std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank_of(m), 2);
    EchelonForm e(3);
    EXPECT_TRUE(e.insert({{0, 1}, {1, 2}}));
    EXPECT_FALSE(e.insert({{0, 2}, {1, 4}}));
    EXPECT_EQ(e.free_columns(), (std::vector<int>{1, 2}));
}
