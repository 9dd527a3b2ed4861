#include <gtest/gtest.h>

#include "seqsr/seqsr.hpp"
#include "support/oracles.hpp"

using namespace seqsr;

namespace {

const FieldSpec Q{};
SquarefreeIdeal ideal(int n, std::vector<Face> gens) { return SquarefreeIdeal::from_generators(n, std::move(gens)); }
SimplicialComplex ind_cycle(int n) { return independence_complex(cycle_graph(n)); }

}  // namespace

TEST(SrIdeal, Examples) {
    EXPECT_EQ(sr_ideal(skeleton(SimplicialComplex::simplex(3), 1)).generators(), (std::vector<Face>{Face{1, 2, 3}}));
    const auto c5 = sr_ideal(ind_cycle(5));
    EXPECT_EQ(c5.generators().size(), 5u);
    for (auto [u, v] : cycle_graph(5).edges()) EXPECT_TRUE(c5.contains(Face{u, v}));
    EXPECT_TRUE(sr_ideal(SimplicialComplex::simplex(4)).is_zero());
}

TEST(SquarefreeIdeal, Minimalizes) {
    const auto I = ideal(4, {Face{1, 2, 3}, Face{1, 2}, Face{3, 4}, Face{1, 2}});
    EXPECT_EQ(I.generators(), (std::vector<Face>{Face{1, 2}, Face{3, 4}}));
    EXPECT_THROW(ideal(2, {Face{3}}), InputError);
}

TEST(ComplexOfIdeal, Examples) {
    EXPECT_EQ(complex_of_ideal(ideal(3, {})), SimplicialComplex::simplex(3));
    EXPECT_EQ(complex_of_ideal(ideal(2, {Face{1, 2}})).facets(), (std::vector<Face>{Face{1}, Face{2}}));
    EXPECT_TRUE(complex_of_ideal(ideal(2, {Face{}})).is_void());
}

TEST(ComplexOfIdeal, RoundTrip) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 80; ++t) {
        const auto c = oracle::random_complex(rng, 6, 5);
        EXPECT_EQ(complex_of_ideal(sr_ideal(c)), c) << format_complex(c);
    }
}

TEST(BettiIdeal, Examples) {
    const auto principal = betti_ideal(ideal(2, {Face{1, 2}}), Q);
    EXPECT_EQ(principal.entries().size(), 1u);
    EXPECT_EQ(principal(0, 2), 1);
    const auto path = betti_ideal(ideal(3, {Face{1, 2}, Face{2, 3}}), Q);
    EXPECT_EQ(path(0, 2), 2);
    EXPECT_EQ(path(1, 3), 1);
    EXPECT_EQ(path.entries().size(), 2u);
    EXPECT_THROW(betti_ideal(ideal(3, {}), Q), InputError);
}

TEST(BettiFaceRing, HollowTriangle) {
    const auto t = betti_face_ring(skeleton(SimplicialComplex::simplex(3), 1), Q);
    EXPECT_EQ(t(0, 0), 1);
    EXPECT_EQ(t(1, 3), 1);
    EXPECT_EQ(t.entries().size(), 2u);
    EXPECT_EQ(t.to_macaulay(), "        0 1\ntotal:  1 1\n     0: 1 .\n     1: . .\n     2: . 1\n");
    EXPECT_THROW(betti_face_ring(SimplicialComplex::void_complex(2), Q), InputError);
}

TEST(BettiFaceRing, HochsterMatchesKoszulOracle) {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 40; ++t) {
        const auto c = oracle::random_complex(rng, 5, 5);
        EXPECT_EQ(betti_face_ring(c, Q), koszul_betti(c, Q)) << format_complex(c);
        if (!c.is_full_simplex()) {
            const auto I = sr_ideal(c);
            EXPECT_EQ(betti_ideal(I, Q), koszul_betti(I, Q)) << format_complex(c);
        }
    }
}

TEST(BettiFaceRing, ShiftIdentity) {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 30; ++t) {
        const auto c = oracle::random_complex(rng, 5, 4);
        if (c.is_full_simplex()) continue;
        EXPECT_EQ(betti_face_ring(c, Q).shifted_to_ideal(), koszul_betti(sr_ideal(c), Q));
    }
}

TEST(BettiFaceRing, Truncation) {
    const auto c = ind_cycle(6);
    const auto full = betti_face_ring(c, Q);
    const auto cut = betti_face_ring(c, Q, {}, 1);
    for (const auto& [ij, v] : full.entries())
        EXPECT_EQ(cut(ij.first, ij.second), ij.first <= 1 ? v : 0);
}

TEST(KoszulBetti, CapIsEnforced) {
    EXPECT_THROW(koszul_betti(SimplicialComplex::irrelevant(9), Q), ResourceError);
}

TEST(DegreeComponent, Examples) {
    EXPECT_EQ(degree_component(ideal(3, {Face{1, 2}}), 3).generators(), (std::vector<Face>{Face{1, 2, 3}}));
    const auto two = ideal(4, {Face{1, 2}, Face{3, 4}});
    EXPECT_EQ(degree_component(two, 2), two);
    const auto mixed = ideal(4, {Face{1, 2}, Face{2, 3, 4}});
    EXPECT_EQ(degree_component(mixed, 3).generators(),
              (std::vector<Face>{Face{1, 2, 3}, Face{1, 2, 4}, Face{2, 3, 4}}));
    EXPECT_TRUE(degree_component(mixed, 1).is_zero());
}

TEST(DegreeComponent, MatchesEnumeration) {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 30; ++t) {
        const auto I = sr_ideal(oracle::random_complex(rng, 6, 4));
        for (int j = 0; j <= 6; ++j) {
            std::vector<Face> expect;
            for (std::uint64_t b = 0; b < 64; ++b) {
                const Face f = Face::from_bits(b);
                if (f.size() == j && I.contains(f)) expect.push_back(f);
            }
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(degree_component(I, j).generators(), expect);
        }
    }
}

TEST(Linearity, Examples) {
    for (int r = 1; r <= 4; ++r) EXPECT_TRUE(is_linear_first_r(ideal(3, {Face{1, 2}, Face{2, 3}}), r, Q).verdict);
    const auto mixed = is_linear_first_r(ideal(4, {Face{1, 2, 3}, Face{1, 4}}), 1, Q);
    ASSERT_FALSE(mixed.verdict);
    EXPECT_EQ(mixed.witness->betti_i, 0);
    EXPECT_EQ(mixed.witness->betti_j, 3);
    EXPECT_THROW(is_linear_first_r(ideal(3, {Face{1}}), 0, Q), InputError);
}

TEST(Linearity, DualOfSevenCycleLinearForTwoStepsOnly) {
    const auto I = sr_ideal(alexander_dual(ind_cycle(7)));
    EXPECT_EQ(I.degree_histogram(), (std::map<int, long>{{4, 7}}));
    EXPECT_TRUE(is_linear_first_r(I, 2, Q).verdict);
    const auto three = is_linear_first_r(I, 3, Q);
    ASSERT_FALSE(three.verdict);
    EXPECT_EQ(three.witness->betti_i, 2);
    EXPECT_EQ(three.witness->betti_j, 7);
}

TEST(Linearity, ComponentwiseWitnessNamesTheDegree) {
    const auto I = sr_ideal(alexander_dual(ind_cycle(6)));
    const auto rep = is_cw_linear_first_r(I, 2, Q);
    ASSERT_FALSE(rep.verdict);
    EXPECT_EQ(rep.witness->reason, "component-not-linear");
    EXPECT_TRUE(rep.witness->degree.has_value());
}

TEST(Duality, SeqSrMatchesComponentwiseLinearityOfDual) {
    std::mt19937_64 rng(65);
    for (int t = 0; t < 40; ++t) {
        const auto c = oracle::random_sized_complex(rng, 6, 5, 4);
        if (c.is_full_simplex()) continue;
        for (int r : {2, 3})
            EXPECT_EQ(is_seq_Sr_skeleton(c, r, Q).verdict,
                      is_cw_linear_first_r(sr_ideal(alexander_dual(c)), r, Q).verdict)
                << format_complex(c) << " r=" << r;
    }
}

TEST(Duality, AlexanderDualIsAnInvolution) {
    std::mt19937_64 rng(66);
    for (int t = 0; t < 60; ++t) {
        const auto c = oracle::random_complex(rng, 7, 5);
        if (c.is_full_simplex() || c.is_void()) continue;
        const auto d = alexander_dual(c);
        if (d.is_void()) continue;
        EXPECT_EQ(alexander_dual(d), c);
    }
}

TEST(Depth, HollowTriangleIsCM) {
    const auto info = pd_and_depth(skeleton(SimplicialComplex::simplex(3), 1), Q);
    EXPECT_EQ(info.pd, 1);
    EXPECT_EQ(info.depth, 2);
}

TEST(Depth, DepthEqualsKrullDimensionExactlyForCM) {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 60; ++t) {
        const auto c = oracle::random_sized_complex(rng, 6, 5, 4);
        const auto info = pd_and_depth(c, Q);
        EXPECT_EQ(info.depth == c.dim() + 1, is_CM(c, Q).verdict) << format_complex(c);
    }
}
