#pragma once

#include <string>
#include <vector>

#include "seqsr/check_report.hpp"
#include "seqsr/decomposition.hpp"
#include "seqsr/graph.hpp"
#include "seqsr/serre.hpp"

namespace seqsr {

namespace detail {

/// Independent sets of G that are not maximal, ∅ included, in lex order.
inline std::vector<Face> nonmaximal_independent_sets(const Graph& g, const Limits& limits) {
    const SimplicialComplex ind = independence_complex(g, limits);
    std::vector<Face> out;
    for (const auto& level : all_faces(ind, limits).by_dim)
        for (Face f : level)
            if (!is_facet(ind, f)) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string cycle_text(const std::vector<int>& cyc) {
    std::string s = "cycle";
    for (int v : cyc) s += " " + std::to_string(v);
    return s;
}

/// Some chordless (2t+1)-cycle, t >= 2, carries t pairwise nonadjacent vertices of degree 2 in H.
inline bool has_odd_cycle_with_degree_two_vertices(const Graph& h, const Limits& limits) {
    for (const auto& cyc : chordless_cycles(h, Parity::Odd, limits)) {
        const int t = static_cast<int>(cyc.size()) / 2;
        std::vector<int> deg2;
        for (int v : cyc)
            if (h.degree(v) == 2) deg2.push_back(v);
        if (static_cast<int>(deg2.size()) < t) continue;
        bool found = false;
        auto pick = [&](auto&& self, std::size_t from, Face chosen) -> void {
            if (found) return;
            if (chosen.size() == t) {
                found = true;
                return;
            }
            for (std::size_t k = from; k < deg2.size() && !found; ++k)
                if (!h.neighbors(deg2[k]).intersects(chosen)) self(self, k + 1, chosen.with(deg2[k]));
        };
        pick(pick, 0, Face{});
        if (found) return true;
    }
    return false;
}

}  // namespace detail

/// For every non-maximal independent F, G \ N_G[F] has a vertex of degree <= 1.
inline CheckReport condition_iv(const Graph& g, const Limits& limits = {}) {
    CheckReport rep = CheckReport::pass("condition-iv", std::nullopt, FieldSpec{});
    rep.field = "-";
    for (Face f : detail::nonmaximal_independent_sets(g, limits)) {
        const Graph h = remove_closed_neighborhood(g, f).graph;
        bool ok = false;
        for (int v = 1; v <= h.n() && !ok; ++v) ok = h.degree(v) <= 1;
        if (!ok) return rep.fail({.reason = "no-low-degree-vertex", .face = f});
    }
    return rep;
}

/**
 * Sufficient condition for sequential S_2: for every non-maximal independent
 * F, H = G \ N_G[F] (i) has no chordless even cycle, or (ii) has a simplicial
 * vertex, or (iii) has a chordless (2t+1)-cycle, t >= 2, with t pairwise
 * nonadjacent vertices of degree 2 in H. A false verdict says nothing about
 * sequential S_2.
 */
inline CheckReport chordless_conditions(const Graph& g, const Limits& limits = {}) {
    CheckReport rep = CheckReport::pass("chordless-conditions", std::nullopt, FieldSpec{});
    rep.field = "-";
    for (Face f : detail::nonmaximal_independent_sets(g, limits)) {
        const Graph h = remove_closed_neighborhood(g, f).graph;
        if (chordless_cycles(h, Parity::Even, limits).empty()) continue;
        if (!simplicial_vertices(h).empty()) continue;
        if (detail::has_odd_cycle_with_degree_two_vertices(h, limits)) continue;
        return rep.fail({.reason = "no-condition-holds", .face = f});
    }
    return rep;
}

/// Every chordless even cycle has a vertex carrying a whisker (a degree-one neighbour).
inline CheckReport whiskered_even_cycles(const Graph& g, const Limits& limits = {}) {
    CheckReport rep = CheckReport::pass("whiskered-even-cycles", std::nullopt, FieldSpec{});
    rep.field = "-";
    for (const auto& cyc : chordless_cycles(g, Parity::Even, limits)) {
        const bool whiskered = std::any_of(cyc.begin(), cyc.end(), [&](int x) {
            bool w = false;
            g.neighbors(x).for_each([&](int z) { w = w || g.degree(z) == 1; });
            return w;
        });
        if (!whiskered) {
            Witness w{.reason = "unwhiskered-even-cycle"};
            w.detail = detail::cycle_text(cyc);
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

/// The five verdicts that coincide on bipartite graphs.
struct BipartiteBattery {
    CheckReport vertex_decomposable;
    CheckReport shellable;
    CheckReport seq_cm;
    CheckReport condition_iv;
    CheckReport seq_s2;

    std::vector<const CheckReport*> all() const {
        return {&vertex_decomposable, &shellable, &seq_cm, &condition_iv, &seq_s2};
    }
    bool agree() const {
        for (const CheckReport* r : all())
            if (r->verdict != vertex_decomposable.verdict) return false;
        return true;
    }
};

inline BipartiteBattery bipartite_battery(const Graph& g, const FieldSpec& field = {}, const Limits& limits = {}) {
    if (!g.is_bipartite()) throw InputError("bipartite battery: graph is not bipartite");
    const SimplicialComplex ind = independence_complex(g, limits);
    return BipartiteBattery{
        .vertex_decomposable = is_vertex_decomposable(ind, limits),
        .shellable = is_shellable(ind, limits),
        .seq_cm = is_seq_CM(ind, field, limits),
        .condition_iv = condition_iv(g, limits),
        .seq_s2 = is_seq_Sr_skeleton(ind, 2, field, limits),
    };
}

}  // namespace seqsr
