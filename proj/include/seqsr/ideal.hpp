#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "seqsr/complex.hpp"

namespace seqsr {

/// A squarefree monomial ideal; generator F stands for x_F = ∏_{i∈F} x_i.
/// Generators are kept as a sorted antichain (minimal under containment).
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;

    static SquarefreeIdeal from_generators(int n, std::vector<Face> gens) {
        if (n < 0 || n > kMaxGroundSet) throw InputError("ideal: ground set size out of range");
        const Face ground = Face::full(n);
        for (Face g : gens)
            if (!g.subset_of(ground)) throw InputError("ideal: generator " + g.to_string() + " outside 1..n");
        std::sort(gens.begin(), gens.end(), [](Face a, Face b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Face> kept;
        for (Face g : gens)
            if (std::none_of(kept.begin(), kept.end(), [g](Face k) { return k.subset_of(g); })) kept.push_back(g);
        std::sort(kept.begin(), kept.end());
        SquarefreeIdeal I;
        I.n_ = n;
        I.gens_ = std::move(kept);
        return I;
    }

    int n() const noexcept { return n_; }
    const std::vector<Face>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    /// x_F ∈ I
    bool contains(Face f) const noexcept {
        return std::any_of(gens_.begin(), gens_.end(), [f](Face g) { return g.subset_of(f); });
    }

    /// degree -> number of minimal generators of that degree
    std::map<int, long> degree_histogram() const {
        std::map<int, long> h;
        for (Face g : gens_) ++h[g.size()];
        return h;
    }

    friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Face> gens_;
};

/// I_Δ, generated by the minimal nonfaces of Δ.
inline SquarefreeIdeal sr_ideal(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void()) throw InputError("Stanley-Reisner ideal of the void complex");
    return SquarefreeIdeal::from_generators(c.n(), minimal_nonfaces(c, limits));
}

/**
 * The complex Δ with I_Δ = I: faces are the sets containing no generator.
 * Its facets are the complements of the minimal transversals of the
 * generators, computed by Berge's incremental algorithm.
 */
inline SimplicialComplex complex_of_ideal(const SquarefreeIdeal& I) {
    std::vector<Face> transversals{Face{}};
    for (Face g : I.generators()) {
        std::set<Face> next;
        for (Face t : transversals) {
            if (t.intersects(g))
                next.insert(t);
            else
                g.for_each([&](int v) { next.insert(t.with(v)); });
        }
        std::vector<Face> cand(next.begin(), next.end());
        std::sort(cand.begin(), cand.end(), [](Face a, Face b) { return a.size() < b.size(); });
        transversals.clear();
        for (Face t : cand)
            if (std::none_of(transversals.begin(), transversals.end(), [t](Face k) { return k.subset_of(t); }))
                transversals.push_back(t);
    }
    const Face ground = Face::full(I.n());
    std::vector<Face> gens;
    // A generator equal to ∅ is the unit ideal: no transversal exists and the complex is void.
    for (Face t : transversals) gens.push_back(ground - t);
    return SimplicialComplex::from_facets(I.n(), std::move(gens));
}

/// I_[j]: all squarefree monomials of degree j lying in I.
inline SquarefreeIdeal degree_component(const SquarefreeIdeal& I, int j) {
    if (j < 0) throw InputError("degree component: j must be >= 0");
    std::set<Face> out;
    const Face ground = Face::full(I.n());
    for (Face g : I.generators()) {
        if (g.size() > j) continue;
        for_each_k_subset(ground - g, j - g.size(), [&](Face extra) { out.insert(g | extra); });
    }
    return SquarefreeIdeal::from_generators(I.n(), std::vector<Face>(out.begin(), out.end()));
}

}  // namespace seqsr
