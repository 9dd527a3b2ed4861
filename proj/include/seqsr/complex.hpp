#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "seqsr/errors.hpp"
#include "seqsr/face.hpp"

namespace seqsr {

/// Dimension reported for the void complex (no faces at all).
inline constexpr int kVoidDim = -2;

/**
 * A simplicial complex on the ground set {1, ..., n}, stored by its facets.
 *
 * The facet list is always a lexicographically sorted antichain. Three
 * degenerate states are kept apart:
 *   - void: no faces, no facets;
 *   - irrelevant {∅}: the single facet ∅, dimension -1;
 *   - everything else.
 * Ground-set vertices that lie in no facet are allowed and kept.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// The complex generated by `generators`. An empty list gives the void complex.
    static SimplicialComplex from_facets(int n, std::vector<Face> generators) {
        if (n < 0 || n > kMaxGroundSet)
            throw InputError("ground set size " + std::to_string(n) + " outside 0.." +
                             std::to_string(kMaxGroundSet));
        const Face ground = Face::full(n);
        for (Face g : generators)
            if (!g.subset_of(ground))
                throw InputError("face " + g.to_string() + " has a label outside 1.." + std::to_string(n));
        SimplicialComplex c;
        c.n_ = n;
        c.facets_ = maximal_antichain(std::move(generators));
        return c;
    }

    static SimplicialComplex void_complex(int n) { return from_facets(n, {}); }
    static SimplicialComplex irrelevant(int n) { return from_facets(n, {Face{}}); }
    static SimplicialComplex simplex(int n) { return from_facets(n, {Face::full(n)}); }

    int n() const noexcept { return n_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    std::size_t num_facets() const noexcept { return facets_.size(); }

    bool is_void() const noexcept { return facets_.empty(); }
    bool is_irrelevant() const noexcept { return facets_.size() == 1 && facets_.front().empty(); }
    /// Exactly one facet (covers {∅} and single points).
    bool is_simplex() const noexcept { return facets_.size() == 1; }
    bool is_full_simplex() const noexcept { return is_simplex() && facets_.front() == Face::full(n_); }

    /// Largest facet dimension; -1 for {∅}; kVoidDim for the void complex.
    int dim() const noexcept {
        int d = kVoidDim;
        for (Face f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool contains(Face f) const noexcept {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
    }

    /// Union of all facets (the vertices actually used).
    Face support() const noexcept {
        Face s;
        for (Face f : facets_) s = s | f;
        return s;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    /// Drops every generator contained in another and sorts the rest.
    static std::vector<Face> maximal_antichain(std::vector<Face> gens) {
        std::sort(gens.begin(), gens.end(), [](Face a, Face b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Face> kept;
        kept.reserve(gens.size());
        for (Face g : gens) {
            if (std::none_of(kept.begin(), kept.end(), [g](Face k) { return g.subset_of(k); }))
                kept.push_back(g);
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

private:
    int n_ = 0;
    std::vector<Face> facets_;
};

/// A subcomplex paired with its ambient complex on the same ground set.
class RelativePair {
public:
    RelativePair(SimplicialComplex ambient, SimplicialComplex sub)
        : ambient_(std::move(ambient)), sub_(std::move(sub)) {
        if (ambient_.n() != sub_.n()) throw InputError("relative pair: ground sets differ");
        for (Face f : sub_.facets())
            if (!ambient_.contains(f))
                throw InputError("relative pair: " + f.to_string() + " is not a face of the ambient complex");
    }

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    const SimplicialComplex& sub() const noexcept { return sub_; }

private:
    SimplicialComplex ambient_;
    SimplicialComplex sub_;
};

/// Faces of a complex grouped by dimension: by_dim[d + 1] lists the d-faces in lex order.
struct FaceLattice {
    std::vector<std::vector<Face>> by_dim;

    int top_dim() const { return static_cast<int>(by_dim.size()) - 2; }
    const std::vector<Face>& of_dim(int d) const {
        static const std::vector<Face> none;
        if (d + 1 < 0 || d + 1 >= static_cast<int>(by_dim.size())) return none;
        return by_dim[static_cast<std::size_t>(d + 1)];
    }
    /// f_{-1}, f_0, ..., f_dim
    std::vector<long> f_vector() const {
        std::vector<long> f;
        for (const auto& level : by_dim) f.push_back(static_cast<long>(level.size()));
        return f;
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& level : by_dim) t += level.size();
        return t;
    }
};

/// Every face of `c`, grouped by dimension. Void complexes give an empty lattice.
inline FaceLattice all_faces(const SimplicialComplex& c, const Limits& limits = {}) {
    require_cap("max_vertices", limits.max_vertices, c.n());
    FaceLattice lat;
    if (c.is_void()) return lat;
    std::unordered_set<Face> seen;
    for (Face f : c.facets())
        for_each_subset(f, [&](Face s) { seen.insert(s); });
    lat.by_dim.resize(static_cast<std::size_t>(c.dim() + 2));
    for (Face s : seen) lat.by_dim[static_cast<std::size_t>(s.size())].push_back(s);
    for (auto& level : lat.by_dim) std::sort(level.begin(), level.end());
    return lat;
}

/// All faces of dimension <= i.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw InputError("skeleton of the void complex");
    if (i < -1) throw InputError("skeleton index must be >= -1");
    if (i >= c.dim()) return c;
    std::vector<Face> gens;
    for (Face f : c.facets()) {
        if (f.dim() <= i)
            gens.push_back(f);
        else
            for_each_k_subset(f, i + 1, [&](Face s) { gens.push_back(s); });
    }
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// The subcomplex generated by the i-dimensional faces. Void when i > dim.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw InputError("pure skeleton of the void complex");
    if (i < -1) throw InputError("pure skeleton index must be >= -1");
    std::vector<Face> gens;
    for (Face f : c.facets())
        if (f.dim() >= i) for_each_k_subset(f, i + 1, [&](Face s) { gens.push_back(s); });
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// The subcomplex generated by the facets of dimension exactly i.
inline SimplicialComplex facet_generated(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw InputError("facet-generated subcomplex of the void complex");
    std::vector<Face> gens;
    for (Face f : c.facets())
        if (f.dim() == i) gens.push_back(f);
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}, on the same ground set.
inline SimplicialComplex link(const SimplicialComplex& c, Face f) {
    if (!c.contains(f)) throw InputError("link: " + f.to_string() + " is not a face");
    std::vector<Face> gens;
    for (Face g : c.facets())
        if (f.subset_of(g)) gens.push_back(g - f);
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// Faces not containing v.
inline SimplicialComplex deletion(const SimplicialComplex& c, int v) {
    if (v < 1 || v > c.n()) throw InputError("deletion: vertex " + std::to_string(v) + " out of range");
    std::vector<Face> gens;
    for (Face g : c.facets()) gens.push_back(g.without(v));
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// Faces contained in w.
inline SimplicialComplex restriction(const SimplicialComplex& c, Face w) {
    if (!w.subset_of(Face::full(c.n()))) throw InputError("restriction: vertex set outside the ground set");
    std::vector<Face> gens;
    for (Face g : c.facets()) gens.push_back(g & w);
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// Minimal nonfaces: S ∉ Δ with every S \ {v} ∈ Δ. Void gives {∅}.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void()) return {Face{}};
    const FaceLattice lat = all_faces(c, limits);
    std::unordered_set<Face> found;
    for (const auto& level : lat.by_dim) {
        for (Face f : level) {
            for (int v = 1; v <= c.n(); ++v) {
                if (f.contains(v)) continue;
                const Face s = f.with(v);
                if (found.count(s) || c.contains(s)) continue;
                bool minimal = true;
                s.for_each([&](int u) {
                    if (minimal && !c.contains(s.without(u))) minimal = false;
                });
                if (minimal) found.insert(s);
            }
        }
    }
    std::vector<Face> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Δ^∨ = {F ⊆ [n] : [n] \ F ∉ Δ}; its facets are complements of the minimal
 * nonfaces of Δ. The void complex and the full simplex are rejected: their
 * duals fall outside the nonvoid, non-full range.
 */
inline SimplicialComplex alexander_dual(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void())
        throw InputError("alexander dual: degenerate input (void complex; its dual would be the full simplex)");
    if (c.is_full_simplex())
        throw InputError("alexander dual: degenerate input (full simplex; its dual would be the void complex)");
    const Face ground = Face::full(c.n());
    std::vector<Face> gens;
    for (Face m : minimal_nonfaces(c, limits)) gens.push_back(ground - m);
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// Shifts every label by `offset`.
inline Face shift(Face f, int offset) {
    return offset >= 64 ? Face{} : Face::from_bits(f.bits() << offset);
}

/// Δ * Γ on n_Δ + n_Γ vertices; Γ's labels are shifted past Δ's.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) throw InputError("join: void input");
    const int n = a.n() + b.n();
    if (n > kMaxGroundSet) throw InputError("join: combined ground set exceeds " + std::to_string(kMaxGroundSet));
    std::vector<Face> gens;
    for (Face f : a.facets())
        for (Face g : b.facets()) gens.push_back(f | shift(g, a.n()));
    return SimplicialComplex::from_facets(n, std::move(gens));
}

inline bool is_pure(const SimplicialComplex& c) {
    if (c.is_void()) return true;
    const int s = c.facets().front().size();
    return std::all_of(c.facets().begin(), c.facets().end(), [s](Face f) { return f.size() == s; });
}

/// Connectivity of the vertex/edge graph. Complexes with at most one vertex count as connected.
inline bool is_connected(const SimplicialComplex& c) {
    const std::vector<int> verts = c.support().labels();
    if (verts.size() <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(c.n() + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Face f : c.facets()) {
        const int root = f.min_label();
        f.for_each([&](int v) { parent[find(v)] = find(root); });
    }
    const int r0 = find(verts.front());
    return std::all_of(verts.begin(), verts.end(), [&](int v) { return find(v) == r0; });
}

/// Relabels the support of `c` to 1..m preserving order. `labels[k]` is the
/// original label of new vertex k+1.
struct Normalized {
    SimplicialComplex complex;
    std::vector<int> labels;
};

inline Normalized normalize_support(const SimplicialComplex& c) {
    Normalized out;
    out.labels = c.support().labels();
    std::vector<int> to_new(static_cast<std::size_t>(c.n() + 1), 0);
    for (std::size_t k = 0; k < out.labels.size(); ++k) to_new[out.labels[k]] = static_cast<int>(k) + 1;
    std::vector<Face> gens;
    for (Face f : c.facets()) {
        Face g;
        f.for_each([&](int v) { g.insert(to_new[v]); });
        gens.push_back(g);
    }
    out.complex = SimplicialComplex::from_facets(static_cast<int>(out.labels.size()), std::move(gens));
    return out;
}

}  // namespace seqsr
