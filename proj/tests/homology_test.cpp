#include <gtest/gtest.h>

#include "seqsr/seqsr.hpp"
#include "support/oracles.hpp"

using namespace seqsr;

namespace {

const FieldSpec Q{};
const FieldSpec GF2 = FieldSpec::prime(2);

SimplicialComplex hollow_triangle() { return skeleton(SimplicialComplex::simplex(3), 1); }

std::vector<long> dims(const HomologyVector& h, int top) {
    std::vector<long> out;
    for (int i = -1; i <= top; ++i) out.push_back(h[i]);
    return out;
}

/// Real projective plane, 6-vertex triangulation.
SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(
        6, {Face{1, 2, 3}, Face{1, 3, 4}, Face{1, 4, 5}, Face{1, 5, 6}, Face{1, 2, 6}, Face{2, 3, 5}, Face{2, 4, 5},
            Face{2, 4, 6}, Face{3, 4, 6}, Face{3, 5, 6}});
}

}  // namespace

TEST(SparseRank, SmallMatrices) {
    SparseMatrix m(2, 2);
    m.columns[0] = {{0, 2}, {1, 4}};
    m.columns[1] = {{0, 1}, {1, 2}};
    EXPECT_EQ(exact_rank(m, Q), 1u);
    m.columns[1] = {{0, 1}, {1, 3}};
    EXPECT_EQ(exact_rank(m, Q), 2u);
    EXPECT_EQ(exact_rank(m, GF2), 1u);  // [[0,1],[0,1]] mod 2
    EXPECT_EQ(exact_rank(SparseMatrix(3, 0), Q), 0u);
}

TEST(SparseRank, SurvivesInt64Overflow) {
    // Entries near 2^40 force the fraction-free path past 64 bits.
    const std::int64_t big = std::int64_t{1} << 40;
    SparseMatrix m(3, 3);
    m.columns[0] = {{0, big + 1}, {1, big - 1}, {2, 3}};
    m.columns[1] = {{0, big - 3}, {1, big + 7}, {2, 5}};
    m.columns[2] = {{0, 2 * big - 2}, {1, 2 * big + 6}, {2, 8}};  // = col0 + col1
    EXPECT_EQ(exact_rank(m, Q), 2u);
}

TEST(SparseRank, AgreesWithDenseOracle) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3), shape(1, 7);
    for (int t = 0; t < 200; ++t) {
        const int r = shape(rng), c = shape(rng);
        SparseMatrix m(r, c);
        std::vector<std::vector<long>> dense(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(c)));
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i) {
                const int v = entry(rng) * (entry(rng) > 0 ? 1 : 0);
                dense[i][j] = v;
                if (v) m.columns[j].emplace_back(i, v);
            }
        EXPECT_EQ(static_cast<long>(exact_rank(m, Q)), oracle::dense_rank(dense, 0));
        EXPECT_EQ(static_cast<long>(exact_rank(m, FieldSpec::prime(3))), oracle::dense_rank(dense, 3));
    }
}

TEST(BoundaryMatrices, SquareToZero) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        const auto c = oracle::random_complex(rng, 7, 5);
        const auto mats = boundary_matrices(c);
        for (std::size_t k = 1; k < mats.size(); ++k) {
            const auto prod = multiply_dense(mats[k - 1], mats[k]);
            for (const auto& row : prod)
                for (auto v : row) EXPECT_EQ(v, 0);
        }
    }
}

TEST(ReducedHomology, Examples) {
    const auto h = reduced_homology(hollow_triangle(), Q);
    EXPECT_EQ(h[0], 0);
    EXPECT_EQ(h[1], 1);
    EXPECT_EQ(reduced_homology(SimplicialComplex::irrelevant(3), Q)[-1], 1);
    EXPECT_TRUE(reduced_homology(SimplicialComplex::simplex(4), Q).is_zero());
    const auto c7 = independence_complex(cycle_graph(7));
    EXPECT_EQ(reduced_homology(pure_skeleton(c7, 2), Q)[1], 1);
    EXPECT_EQ(reduced_homology(pure_skeleton(c7, 2), Q).to_string(), "-1:0 0:0 1:1 2:0");
}

TEST(ReducedHomology, TwoPointsAndVoid) {
    const auto two = SimplicialComplex::from_facets(2, {Face{1}, Face{2}});
    EXPECT_EQ(dims(reduced_homology(two, Q), 0), (std::vector<long>{0, 1}));
    EXPECT_TRUE(reduced_homology(SimplicialComplex::void_complex(3), Q).is_zero());
}

TEST(ReducedHomology, FieldDependenceOnProjectivePlane) {
    EXPECT_TRUE(reduced_homology(rp2(), Q).is_zero());
    const auto h2 = reduced_homology(rp2(), GF2);
    EXPECT_EQ(h2[1], 1);
    EXPECT_EQ(h2[2], 1);
    EXPECT_TRUE(reduced_homology(rp2(), FieldSpec::prime(3)).is_zero());
}

TEST(ReducedHomology, MatchesDenseOracle) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 60; ++t) {
        const auto c = oracle::random_complex(rng, 6, 6);
        for (long p : {0L, 2L}) {
            const auto h = reduced_homology(c, p ? GF2 : Q);
            const int top = std::max(c.dim(), 0);
            EXPECT_EQ(dims(h, top), oracle::reduced_homology(c, top, p)) << format_complex(c);
        }
    }
}

TEST(RelativeHomology, Examples) {
    const auto c5 = independence_complex(cycle_graph(5));
    EXPECT_TRUE(relative_homology(RelativePair(c5, c5), Q).is_zero());
    EXPECT_EQ(relative_homology(RelativePair(c5, SimplicialComplex::void_complex(5)), Q), reduced_homology(c5, Q));
    const auto edge = SimplicialComplex::simplex(2);
    const auto boundary = SimplicialComplex::from_facets(2, {Face{1}, Face{2}});
    const auto h = relative_homology(RelativePair(edge, boundary), Q);
    EXPECT_EQ(h[1], 1);
    EXPECT_EQ(h[0], 0);
    EXPECT_EQ(h[-1], 0);
}

TEST(RelativeHomology, MatchesDenseOracle) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 60; ++t) {
        const auto c = oracle::random_complex(rng, 6, 5);
        // Subcomplex: generated by a random subset of faces of c.
        std::vector<Face> sub;
        for (Face f : oracle::faces(c))
            if (rng() % 5 == 0) sub.push_back(f);
        const auto s = SimplicialComplex::from_facets(6, sub);
        const int top = std::max(c.dim(), 0);
        EXPECT_EQ(dims(relative_homology(RelativePair(c, s), Q), top),
                  oracle::relative_homology(oracle::faces(c), oracle::faces(s), top));
    }
}

TEST(HomologyVector, EulerPoincare) {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 60; ++t) {
        const auto c = oracle::random_complex(rng, 7, 6);
        long chi = 0;
        const auto f = all_faces(c).f_vector();
        for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * f[k];
        // reduced Euler characteristic with f_{-1} = 1: Σ_{i>=-1} (-1)^i f_i
        EXPECT_EQ(reduced_homology(c, Q).euler_characteristic(), chi);
    }
}
