#pragma once

#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

#include "seqsr/check_report.hpp"
#include "seqsr/complex.hpp"

namespace seqsr {

namespace detail {

/// v is a shedding vertex: no face of lk(v) is a facet of Δ \ v.
inline bool is_shedding(const SimplicialComplex& c, int v, const SimplicialComplex& del) {
    return std::none_of(del.facets().begin(), del.facets().end(),
                        [&](Face g) { return c.contains(g.with(v)); });
}

class VertexDecomposer {
public:
    bool decomposable(const SimplicialComplex& c) {
        if (c.is_void() || c.is_simplex()) return true;
        const Normalized norm = normalize_support(c);
        std::vector<std::uint64_t> key;
        key.push_back(static_cast<std::uint64_t>(norm.complex.n()));
        for (Face f : norm.complex.facets()) key.push_back(f.bits());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const bool ok = first_shedding(norm.complex) != 0;
        memo_[key] = ok;
        return ok;
    }

    /// Smallest vertex v that sheds with both deletion and link decomposable, or 0.
    int first_shedding(const SimplicialComplex& c) {
        int found = 0;
        c.support().for_each([&](int v) {
            if (found) return;
            const SimplicialComplex del = deletion(c, v);
            if (!is_shedding(c, v, del)) return;
            if (decomposable(del) && decomposable(link(c, Face::singleton(v)))) found = v;
        });
        return found;
    }

private:
    std::map<std::vector<std::uint64_t>, bool> memo_;
};

}  // namespace detail

/**
 * Vertex decomposability (nonpure sense). Vertices are tried in ascending
 * order and the first success wins. On success the certificate lists the
 * shedding vertices along the deletion chain Δ, Δ \ v1, Δ \ v1 \ v2, ...
 * down to a simplex.
 */
inline CheckReport is_vertex_decomposable(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void()) throw InputError("vertex decomposability of the void complex");
    require_cap("max_vertices", limits.max_vertices, c.n());
    CheckReport rep = CheckReport::pass("vertex-decomposable", std::nullopt, FieldSpec{});
    rep.field = "-";
    detail::VertexDecomposer vd;
    rep.certificate_kind = "shedding-sequence";
    SimplicialComplex cur = c;
    std::vector<int> chain;
    while (!cur.is_simplex()) {
        const int v = vd.first_shedding(cur);
        if (v == 0) {
            // Only reachable on the first pass: a shedding vertex of a
            // decomposable complex leaves a decomposable deletion.
            rep.certificate_kind.clear();
            return rep.fail({.reason = "no-shedding-vertex"});
        }
        chain.push_back(v);
        cur = deletion(cur, v);
    }
    rep.certificate.push_back(chain);
    return rep;
}

namespace detail {

/// Facet F may follow the facets in `placed`: ⟨placed⟩ ∩ ⟨F⟩ is pure of dimension dim F - 1.
inline bool extends_shelling(const std::vector<Face>& facets, std::uint64_t placed, Face f) {
    const int want = f.size() - 1;
    std::vector<Face> codim_one;
    std::vector<Face> meets;
    for (std::uint64_t m = placed; m; m &= m - 1) {
        const Face i = facets[static_cast<std::size_t>(std::countr_zero(m))] & f;
        if (i.size() == want)
            codim_one.push_back(i);
        else
            meets.push_back(i);
    }
    if (codim_one.empty()) return false;
    return std::all_of(meets.begin(), meets.end(), [&](Face i) {
        return std::any_of(codim_one.begin(), codim_one.end(), [i](Face g) { return i.subset_of(g); });
    });
}

class ShellingSearch {
public:
    explicit ShellingSearch(std::vector<Face> facets) : facets_(std::move(facets)) {
        // Any shelling can be rearranged so facet dimensions weakly decrease,
        // so only such orders are searched.
        std::stable_sort(facets_.begin(), facets_.end(), [](Face a, Face b) { return a.size() > b.size(); });
    }

    bool run(std::vector<Face>& order) {
        const std::size_t t = facets_.size();
        for (std::size_t k = 0; k < t && facets_[k].size() == facets_[0].size(); ++k) {
            order = {facets_[k]};
            if (extend(std::uint64_t{1} << k, order)) return true;
        }
        return false;
    }

private:
    bool extend(std::uint64_t placed, std::vector<Face>& order) {
        const std::size_t t = facets_.size();
        if (order.size() == t) return true;
        if (failed_.count(placed)) return false;
        int top = -1;
        for (std::size_t k = 0; k < t; ++k)
            if (!((placed >> k) & 1U)) top = std::max(top, facets_[k].size());
        for (std::size_t k = 0; k < t; ++k) {
            if (((placed >> k) & 1U) || facets_[k].size() != top) continue;
            if (!extends_shelling(facets_, placed, facets_[k])) continue;
            order.push_back(facets_[k]);
            if (extend(placed | (std::uint64_t{1} << k), order)) return true;
            order.pop_back();
        }
        failed_.insert(placed);
        return false;
    }

    std::vector<Face> facets_;
    std::unordered_set<std::uint64_t> failed_;
};

}  // namespace detail

/**
 * Shellability in the nonpure (Björner-Wachs) sense: an order F1, ..., Ft of
 * the facets such that ⟨F1..F(k-1)⟩ ∩ ⟨Fk⟩ is pure of dimension dim Fk - 1
 * for every k >= 2. Backtracking over orders with decreasing dimensions,
 * memoizing dead facet subsets. The certificate is the shelling order.
 */
inline CheckReport is_shellable(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void()) throw InputError("shellability of the void complex");
    require_cap("max_facets", std::min(limits.max_facets, 64), static_cast<long>(c.num_facets()));
    CheckReport rep = CheckReport::pass("shellable", std::nullopt, FieldSpec{});
    rep.field = "-";
    std::vector<Face> order;
    detail::ShellingSearch search(c.facets());
    if (!search.run(order)) return rep.fail({.reason = "no-shelling-order"});
    rep.certificate_kind = "shelling-order";
    for (Face f : order) rep.certificate.push_back(f.labels());
    return rep;
}

}  // namespace seqsr
