#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "seqsr/complex.hpp"
#include "seqsr/field.hpp"
#include "seqsr/sparse_rank.hpp"

namespace seqsr {

/// dim_k of (relative) reduced homology in degrees -1 .. top; absent degrees are 0.
class HomologyVector {
public:
    HomologyVector() = default;
    explicit HomologyVector(int top) : dims_(static_cast<std::size_t>(std::max(top, -1) + 2), 0) {}

    /// Highest degree carried (may be below -1 for an empty vector).
    int top() const noexcept { return static_cast<int>(dims_.size()) - 2; }

    long operator[](int degree) const noexcept {
        const int k = degree + 1;
        return (k < 0 || k >= static_cast<int>(dims_.size())) ? 0 : dims_[static_cast<std::size_t>(k)];
    }
    void set(int degree, long value) { dims_.at(static_cast<std::size_t>(degree + 1)) = value; }

    bool is_zero() const noexcept {
        for (long d : dims_)
            if (d != 0) return false;
        return true;
    }

    /// Σ (-1)^i dim H̃_i
    long euler_characteristic() const noexcept {
        long chi = 0;
        for (int i = -1; i <= top(); ++i) chi += ((i + 2) % 2 == 1 ? -1 : 1) * (*this)[i];
        return chi;
    }

    /// "-1:0 0:0 1:1"
    std::string to_string() const {
        std::string s;
        for (int i = -1; i <= top(); ++i) {
            if (!s.empty()) s += ' ';
            s += std::to_string(i) + ":" + std::to_string((*this)[i]);
        }
        return s;
    }

    friend bool operator==(const HomologyVector& a, const HomologyVector& b) {
        const int top = std::max(a.top(), b.top());
        for (int i = -1; i <= top; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

private:
    std::vector<long> dims_;
};

namespace detail {

/// Chain complex spanned by the faces of `faces` (grouped by dimension),
/// with faces in `drop` quotiented away. basis[d+1] lists the surviving d-faces.
struct ChainBasis {
    std::vector<std::vector<Face>> basis;
    std::vector<std::unordered_map<Face, int>> index;
};

inline ChainBasis make_basis(const FaceLattice& lat, const SimplicialComplex* drop) {
    ChainBasis cb;
    cb.basis.resize(lat.by_dim.size());
    cb.index.resize(lat.by_dim.size());
    for (std::size_t k = 0; k < lat.by_dim.size(); ++k) {
        for (Face f : lat.by_dim[k]) {
            if (drop && drop->contains(f)) continue;
            cb.index[k].emplace(f, static_cast<int>(cb.basis[k].size()));
            cb.basis[k].push_back(f);
        }
    }
    return cb;
}

/// ∂ from degree d to d-1 in the given basis, ascending-label orientation.
inline SparseMatrix boundary_in_basis(const ChainBasis& cb, int d) {
    const auto& src = cb.basis[static_cast<std::size_t>(d + 1)];
    const auto& tgt_index = cb.index[static_cast<std::size_t>(d)];
    SparseMatrix m(static_cast<int>(cb.basis[static_cast<std::size_t>(d)].size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto& col = m.columns[c];
        int pos = 0;
        src[c].for_each([&](int v) {
            auto it = tgt_index.find(src[c].without(v));
            if (it != tgt_index.end()) col.emplace_back(it->second, pos % 2 == 0 ? 1 : -1);
            ++pos;
        });
        std::sort(col.begin(), col.end());
    }
    return m;
}

inline HomologyVector homology_of_basis(const ChainBasis& cb, const FieldSpec& field) {
    const int top = static_cast<int>(cb.basis.size()) - 2;
    HomologyVector h(top);
    if (top < -1) return h;
    // rank_of[d+1] = rank ∂_d : C_d -> C_{d-1}, zero for d = -1 and d = top+1.
    std::vector<long> rank_of(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d)
        rank_of[static_cast<std::size_t>(d + 1)] = static_cast<long>(exact_rank(boundary_in_basis(cb, d), field));
    for (int d = -1; d <= top; ++d) {
        const long chains = static_cast<long>(cb.basis[static_cast<std::size_t>(d + 1)].size());
        h.set(d, chains - rank_of[static_cast<std::size_t>(d + 1)] - rank_of[static_cast<std::size_t>(d + 2)]);
    }
    return h;
}

}  // namespace detail

/**
 * Boundary maps ∂_0 .. ∂_dim of the augmented chain complex. Entry d maps
 * d-faces (columns, lex order) to (d-1)-faces (rows, lex order); ∂_0 lands in
 * the one-dimensional degree -1 spanned by ∅.
 */
inline std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& c, const Limits& limits = {}) {
    if (c.is_void()) throw InputError("boundary matrices of the void complex");
    const detail::ChainBasis cb = detail::make_basis(all_faces(c, limits), nullptr);
    std::vector<SparseMatrix> out;
    for (int d = 0; d <= c.dim(); ++d) out.push_back(detail::boundary_in_basis(cb, d));
    return out;
}

/// H̃_i(Δ; k) for -1 <= i <= dim Δ. The void complex has no homology at all.
inline HomologyVector reduced_homology(const SimplicialComplex& c, const FieldSpec& field,
                                       const Limits& limits = {}) {
    if (c.is_void()) return HomologyVector(-2);
    return detail::homology_of_basis(detail::make_basis(all_faces(c, limits), nullptr), field);
}

/// H̃_i(Δ, Γ; k): homology of C̃(Δ)/C̃(Γ). With Γ void this is reduced_homology(Δ).
inline HomologyVector relative_homology(const RelativePair& pair, const FieldSpec& field,
                                        const Limits& limits = {}) {
    if (pair.ambient().is_void()) return HomologyVector(-2);
    const SimplicialComplex* drop = pair.sub().is_void() ? nullptr : &pair.sub();
    return detail::homology_of_basis(detail::make_basis(all_faces(pair.ambient(), limits), drop), field);
}

}  // namespace seqsr
