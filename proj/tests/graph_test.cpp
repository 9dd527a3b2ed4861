#include <gtest/gtest.h>

#include "seqsr/seqsr.hpp"
#include "support/oracles.hpp"

using namespace seqsr;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(i, i % 5 + 1);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 1) % 5 + 6);
    }
    return g;
}

std::vector<Face> as_sets(const std::vector<std::vector<int>>& cycles) {
    std::vector<Face> out;
    for (const auto& c : cycles) out.push_back(Face::from_labels(c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Graph, Construction) {
    EXPECT_THROW(cycle_graph(2), InputError);
    EXPECT_THROW(path_graph(0), InputError);
    EXPECT_THROW(Graph(3).add_edge(1, 1), InputError);
    EXPECT_THROW(Graph(3).add_edge(1, 4), InputError);
    EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
    EXPECT_EQ(complete_bipartite(2, 3).num_edges(), 6u);
    EXPECT_TRUE(complete_bipartite(2, 3).is_bipartite());
    EXPECT_FALSE(cycle_graph(5).is_bipartite());
    EXPECT_TRUE(cycle_graph(6).is_bipartite());
    EXPECT_FALSE(Graph(3, {{1, 2}}).is_connected());
    EXPECT_TRUE(petersen().is_connected());
}

TEST(IndependenceComplex, Examples) {
    EXPECT_EQ(independence_complex(complete_graph(3)).facets(), (std::vector<Face>{Face{1}, Face{2}, Face{3}}));
    EXPECT_EQ(independence_complex(cycle_graph(5)).facets(),
              (std::vector<Face>{Face{1, 3}, Face{1, 4}, Face{2, 4}, Face{2, 5}, Face{3, 5}}));
    EXPECT_EQ(independence_complex(Graph(4)), SimplicialComplex::simplex(4));
    EXPECT_TRUE(independence_complex(Graph(0)).is_irrelevant());
}

TEST(IndependenceComplex, MatchesBruteForce) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.35);
        EXPECT_EQ(independence_complex(g).facets(), oracle::independent_sets_maximal(g)) << format_graph(g);
    }
    EXPECT_EQ(independence_complex(petersen()).facets(), oracle::independent_sets_maximal(petersen()));
}

TEST(IndependenceComplex, CapIsEnforced) {
    Limits lim;
    lim.max_vertices = 8;
    EXPECT_THROW(independence_complex(cycle_graph(9), lim), ResourceError);
}

TEST(ClosedNeighborhood, Examples) {
    EXPECT_EQ(closed_neighborhood(cycle_graph(5), Face{1}), (Face{1, 2, 5}));
    EXPECT_EQ(closed_neighborhood(cycle_graph(5), Face{}), Face{});
    EXPECT_EQ(closed_neighborhood(cycle_graph(6), Face{1, 4}), Face::full(6));
}

TEST(RemoveClosedNeighborhood, Examples) {
    const auto p = remove_closed_neighborhood(cycle_graph(7), Face{1});
    EXPECT_EQ(p.graph, path_graph(4));
    EXPECT_EQ(p.labels, (std::vector<int>{3, 4, 5, 6}));
    const auto e = remove_closed_neighborhood(cycle_graph(5), Face{1});
    EXPECT_EQ(e.graph, path_graph(2));
    EXPECT_EQ(e.labels, (std::vector<int>{3, 4}));
    EXPECT_THROW(remove_closed_neighborhood(cycle_graph(5), Face{1, 2}), InputError);
    EXPECT_EQ(remove_closed_neighborhood(cycle_graph(6), Face{1, 4}).graph.n(), 0);
}

TEST(AddWhiskers, PendantsAreNumberedAfterTheGraph) {
    const Graph w = add_whiskers(cycle_graph(4), Face{1, 3});
    EXPECT_EQ(w.n(), 6);
    EXPECT_TRUE(w.adjacent(1, 5));
    EXPECT_TRUE(w.adjacent(3, 6));
    EXPECT_EQ(w.degree(5), 1);
    EXPECT_EQ(w.num_edges(), 6u);
    EXPECT_THROW(add_whiskers(cycle_graph(4), Face{7}), InputError);
}

TEST(DeleteVertices, KeepsLabelMap) {
    const auto d = delete_vertices(cycle_graph(6), Face{2});
    EXPECT_EQ(d.graph, Graph(5, {{1, 5}, {2, 3}, {3, 4}, {4, 5}}));
    EXPECT_EQ(d.labels, (std::vector<int>{1, 3, 4, 5, 6}));
}

TEST(ChordlessCycles, Examples) {
    EXPECT_EQ(chordless_cycles(cycle_graph(6)), (std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}}));
    Graph chorded = cycle_graph(4);
    chorded.add_edge(1, 3);
    EXPECT_TRUE(chordless_cycles(chorded).empty());
    EXPECT_TRUE(chordless_cycles(complete_graph(5)).empty());
    EXPECT_EQ(chordless_cycles(cycle_graph(5), Parity::Even).size(), 0u);
    EXPECT_EQ(chordless_cycles(cycle_graph(5), Parity::Odd).size(), 1u);
}

TEST(ChordlessCycles, PetersenGraph) {
    const Graph g = petersen();
    const auto odd = chordless_cycles(g, Parity::Odd);
    std::size_t fives = 0;
    for (const auto& c : odd) fives += c.size() == 5;
    EXPECT_EQ(fives, 12u);
    const auto even = chordless_cycles(g, Parity::Even);
    std::size_t sixes = 0;
    for (const auto& c : even) sixes += c.size() == 6;
    EXPECT_EQ(sixes, 10u);
    EXPECT_EQ(as_sets(chordless_cycles(g)), oracle::chordless_cycle_sets(g));
}

TEST(ChordlessCycles, MatchesSubsetOracle) {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 150; ++t) {
        const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.3 + 0.1 * (t % 4));
        const auto cycles = chordless_cycles(g);
        EXPECT_EQ(as_sets(cycles), oracle::chordless_cycle_sets(g)) << format_graph(g);
        for (const auto& c : cycles) {
            EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
            EXPECT_LT(c[1], c.back());
            for (std::size_t k = 0; k < c.size(); ++k) EXPECT_TRUE(g.adjacent(c[k], c[(k + 1) % c.size()]));
        }
        EXPECT_TRUE(std::is_sorted(cycles.begin(), cycles.end()));
    }
}

TEST(SimplicialVertices, Examples) {
    EXPECT_EQ(simplicial_vertices(path_graph(3)), (Face{1, 3}));
    EXPECT_EQ(simplicial_vertices(cycle_graph(5)), Face{});
    Graph tri = complete_graph(3);
    Graph g(4);
    for (auto [u, v] : tri.edges()) g.add_edge(u, v);
    g.add_edge(1, 4);
    EXPECT_EQ(simplicial_vertices(g), (Face{2, 3, 4}));
}

TEST(IndependenceComplex, LinkIsComplexOfNeighborhoodDeletion) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.35);
        const auto c = independence_complex(g);
        for (int x = 1; x <= g.n(); ++x) {
            const auto lk = link(c, Face::singleton(x));
            const auto rest = remove_closed_neighborhood(g, Face::singleton(x));
            const auto rc = independence_complex(rest.graph);
            std::vector<Face> mapped;
            for (Face f : rc.facets()) {
                Face m;
                f.for_each([&](int v) { m.insert(rest.labels[v - 1]); });
                mapped.push_back(m);
            }
            EXPECT_EQ(SimplicialComplex::from_facets(g.n(), mapped), lk) << format_graph(g) << " x=" << x;
        }
    }
}
