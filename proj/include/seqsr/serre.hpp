#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "seqsr/check_report.hpp"
#include "seqsr/complex.hpp"
#include "seqsr/homology.hpp"

// Serre's condition S_r for face rings, decided on links:
//
//   Δ of dimension d-1 is S_r  <=>  H̃_i(lk F; k) = 0 for all -1 <= i <= r-2
//                                   and all F ∈ Δ (∅ included) with #F <= d-i-2.
//
// The sequential variants reduce to this on pure skeletons, on the relative
// pairs cut out by facet dimension, or (for r = 2) on a local recursion.

namespace seqsr {

namespace detail {

inline void require_r(int r) {
    if (r < 2) throw InputError("r must be >= 2 (every face ring satisfies S_1)");
}

inline std::vector<Face> faces_lex(const FaceLattice& lat) {
    std::vector<Face> all;
    for (const auto& level : lat.by_dim) all.insert(all.end(), level.begin(), level.end());
    std::sort(all.begin(), all.end());
    return all;
}

/// Lazily computed link homology, one entry per face.
class LinkHomologyCache {
public:
    LinkHomologyCache(const SimplicialComplex& c, const FieldSpec& field, const Limits& limits)
        : c_(c), field_(field), limits_(limits) {}

    const HomologyVector& of(Face f) {
        auto it = cache_.find(f);
        if (it == cache_.end()) it = cache_.emplace(f, reduced_homology(link(c_, f), field_, limits_)).first;
        return it->second;
    }

private:
    const SimplicialComplex& c_;
    FieldSpec field_;
    Limits limits_;
    std::unordered_map<Face, HomologyVector> cache_;
};

inline bool is_facet(const SimplicialComplex& c, Face f) {
    return std::binary_search(c.facets().begin(), c.facets().end(), f);
}

}  // namespace detail

/**
 * Decides S_r. Degree -1 is tested as "F is not a facet" (purity) and degree 0
 * as connectedness of the link; higher degrees use exact link homology. The
 * witness is the first failing (i, F) with i ascending, then F in lex order.
 * Void complexes and complexes of dimension <= 0 pass vacuously.
 */
inline CheckReport is_Sr(const SimplicialComplex& c, int r, const FieldSpec& field = {},
                         const Limits& limits = {}) {
    detail::require_r(r);
    CheckReport rep = CheckReport::pass("S_r", r, field);
    if (c.is_void()) return rep;
    const int d = c.dim() + 1;
    if (d <= 1) return rep;
    const std::vector<Face> faces = detail::faces_lex(all_faces(c, limits));
    detail::LinkHomologyCache homology(c, field, limits);
    for (int i = -1; i <= r - 2; ++i) {
        const int max_size = d - i - 2;
        if (max_size < 0) break;
        for (Face f : faces) {
            if (f.size() > max_size) continue;
            bool vanishes;
            if (i == -1)
                vanishes = !detail::is_facet(c, f);
            else if (i == 0)
                vanishes = is_connected(link(c, f));
            else
                vanishes = homology.of(f)[i] == 0;
            if (!vanishes) return rep.fail({.reason = "nonvanishing-link-homology", .face = f, .degree = i});
        }
    }
    return rep;
}

namespace detail {

/// Reisner: H̃_i(lk F) = 0 for every F and every i < dim lk F.
inline CheckReport reisner(const SimplicialComplex& c, const FieldSpec& field, const Limits& limits) {
    CheckReport rep = CheckReport::pass("CM", std::nullopt, field);
    if (c.is_void()) return rep;
    const std::vector<Face> faces = faces_lex(all_faces(c, limits));
    std::optional<std::pair<int, Face>> first;
    for (Face f : faces) {
        const SimplicialComplex lk = link(c, f);
        const HomologyVector h = reduced_homology(lk, field, limits);
        for (int i = -1; i < lk.dim(); ++i) {
            if (h[i] != 0) {
                if (!first || std::make_pair(i, f) < *first) first = std::make_pair(i, f);
                break;
            }
        }
    }
    if (first) rep.fail({.reason = "nonvanishing-link-homology", .face = first->second, .degree = first->first});
    return rep;
}

}  // namespace detail

/// Cohen-Macaulay via Reisner's criterion, cross-checked against S_{dim+1}.
inline CheckReport is_CM(const SimplicialComplex& c, const FieldSpec& field = {}, const Limits& limits = {}) {
    CheckReport rep = detail::reisner(c, field, limits);
    if (!c.is_void() && c.dim() + 1 >= 2) {
        const CheckReport viaSr = is_Sr(c, c.dim() + 1, field, limits);
        if (viaSr.verdict != rep.verdict)
            throw std::logic_error("Reisner and S_{dim+1} disagree on " + std::to_string(c.num_facets()) +
                                   "-facet complex");
    }
    return rep;
}

/**
 * Relative S_r: H̃_i(lk_Δ F, lk_Γ F) = 0 for -1 <= i <= r-2 and F ∈ Δ with
 * #F <= d-i-2, d-1 = dim Δ. lk_Γ F is void when F ∉ Γ.
 */
inline CheckReport is_relative_Sr(const RelativePair& pair, int r, const FieldSpec& field = {},
                                  const Limits& limits = {}) {
    detail::require_r(r);
    CheckReport rep = CheckReport::pass("relative-S_r", r, field);
    const SimplicialComplex& amb = pair.ambient();
    if (amb.is_void()) return rep;
    const int d = amb.dim() + 1;
    const std::vector<Face> faces = detail::faces_lex(all_faces(amb, limits));
    std::unordered_map<Face, HomologyVector> cache;
    for (int i = -1; i <= r - 2; ++i) {
        const int max_size = d - i - 2;
        if (max_size < 0) break;
        for (Face f : faces) {
            if (f.size() > max_size) continue;
            auto it = cache.find(f);
            if (it == cache.end()) {
                SimplicialComplex sub_link = pair.sub().contains(f) ? link(pair.sub(), f)
                                                                    : SimplicialComplex::void_complex(amb.n());
                it = cache.emplace(f, relative_homology(RelativePair(link(amb, f), std::move(sub_link)), field,
                                                        limits))
                         .first;
            }
            if (it->second[i] != 0)
                return rep.fail({.reason = "nonvanishing-relative-link-homology", .face = f, .degree = i});
        }
    }
    return rep;
}

/// Sequentially S_r: every pure skeleton Δ^[i], -1 <= i <= dim, is S_r.
inline CheckReport is_seq_Sr_skeleton(const SimplicialComplex& c, int r, const FieldSpec& field = {},
                                      const Limits& limits = {}) {
    detail::require_r(r);
    CheckReport rep = CheckReport::pass("seq-S_r", r, field);
    if (c.is_void()) return rep;
    for (int i = -1; i <= c.dim(); ++i) {
        const CheckReport inner = is_Sr(pure_skeleton(c, i), r, field, limits);
        if (!inner.verdict) {
            Witness w = *inner.witness;
            w.reason = "pure-skeleton-not-S_r";
            w.skeleton_index = i;
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

namespace detail {

using FacetKey = std::vector<std::uint64_t>;

inline FacetKey key_of(const SimplicialComplex& c) {
    FacetKey k;
    k.reserve(c.num_facets() + 1);
    k.push_back(static_cast<std::uint64_t>(c.n()));
    for (Face f : c.facets()) k.push_back(f.bits());
    return k;
}

inline bool seq_s2_local(const SimplicialComplex& c, std::map<FacetKey, bool>& memo, Witness* why) {
    if (c.is_void() || c.dim() <= 0) return true;
    const Normalized norm = normalize_support(c);
    const FacetKey key = key_of(norm.complex);
    if (!why) {
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    bool ok = true;
    for (int i = 1; i <= c.dim() && ok; ++i) {
        if (!is_connected(pure_skeleton(c, i))) {
            ok = false;
            if (why) *why = {.reason = "disconnected-pure-skeleton", .skeleton_index = i};
        }
    }
    if (ok) {
        c.support().for_each([&](int x) {
            if (ok && !seq_s2_local(link(c, Face::singleton(x)), memo, nullptr)) {
                ok = false;
                if (why) *why = {.reason = "vertex-link-not-sequentially-S_2", .vertex = x};
            }
        });
    }
    memo[key] = ok;
    return ok;
}

}  // namespace detail

/**
 * Sequentially S_2 by the local recursion: every Δ^[i], i >= 1, is connected
 * and the link of every vertex is again sequentially S_2. Links are memoized
 * on their support-normalized facet lists.
 */
inline CheckReport is_seq_S2_local(const SimplicialComplex& c, const FieldSpec& field = {}) {
    CheckReport rep = CheckReport::pass("seq-S_2-local", 2, field);
    std::map<detail::FacetKey, bool> memo;
    Witness why;
    if (!detail::seq_s2_local(c, memo, &why)) rep.fail(std::move(why));
    return rep;
}

/// Δ ∩ Γ for two complexes on one ground set.
inline SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> gens;
    for (Face f : a.facets())
        for (Face g : b.facets()) gens.push_back(f & g);
    return SimplicialComplex::from_facets(a.n(), std::move(gens));
}

/// The pair (Δ*_i, Δ*_i ∩ (Δ*_{i+1} ∪ ... ∪ Δ*_dim)) for facet dimension i.
inline RelativePair facet_dimension_pair(const SimplicialComplex& c, int i) {
    SimplicialComplex top_i = facet_generated(c, i);
    std::vector<Face> higher;
    for (Face f : c.facets())
        if (f.dim() > i) higher.push_back(f);
    SimplicialComplex above = SimplicialComplex::from_facets(c.n(), std::move(higher));
    SimplicialComplex sub = above.is_void() ? above : intersection(top_i, above);
    return RelativePair(std::move(top_i), std::move(sub));
}

/// Sequentially S_r via the relative pairs cut out by facet dimension.
inline CheckReport is_seq_Sr_relative(const SimplicialComplex& c, int r, const FieldSpec& field = {},
                                      const Limits& limits = {}) {
    detail::require_r(r);
    CheckReport rep = CheckReport::pass("seq-S_r-relative", r, field);
    if (c.is_void()) return rep;
    for (int i = -1; i <= c.dim(); ++i) {
        const RelativePair pair = facet_dimension_pair(c, i);
        if (pair.ambient().is_void()) continue;
        const CheckReport inner = is_relative_Sr(pair, r, field, limits);
        if (!inner.verdict) {
            Witness w = *inner.witness;
            w.reason = "facet-dimension-pair-not-S_r";
            w.skeleton_index = i;
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

/// Sequentially Cohen-Macaulay: every pure skeleton is Cohen-Macaulay.
inline CheckReport is_seq_CM(const SimplicialComplex& c, const FieldSpec& field = {}, const Limits& limits = {}) {
    CheckReport rep = CheckReport::pass("seq-CM", std::nullopt, field);
    if (c.is_void()) return rep;
    for (int i = -1; i <= c.dim(); ++i) {
        const CheckReport inner = is_CM(pure_skeleton(c, i), field, limits);
        if (!inner.verdict) {
            Witness w = *inner.witness;
            w.reason = "pure-skeleton-not-CM";
            w.skeleton_index = i;
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

}  // namespace seqsr
