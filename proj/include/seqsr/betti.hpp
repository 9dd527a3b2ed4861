#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "seqsr/check_report.hpp"
#include "seqsr/homology.hpp"
#include "seqsr/ideal.hpp"

namespace seqsr {

/// Graded Betti numbers β_{i,j}; only nonzero entries are stored.
class BettiTable {
public:
    enum class Subject { FaceRing, Ideal };

    BettiTable() = default;
    explicit BettiTable(Subject s) : subject_(s) {}

    Subject subject() const noexcept { return subject_; }
    std::string subject_name() const { return subject_ == Subject::FaceRing ? "face-ring" : "ideal"; }

    long operator()(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    void add(int i, int j, long value) {
        if (value == 0) return;
        entries_[{i, j}] += value;
    }
    const std::map<std::pair<int, int>, long>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Largest i with a nonzero entry, -1 if none.
    int max_index() const {
        int m = -1;
        for (const auto& [ij, v] : entries_) m = std::max(m, ij.first);
        return m;
    }

    /// β_{i,j}(I) = β_{i+1,j}(k[Δ]) for I = I_Δ, dropping β_{0,0}(k[Δ]).
    BettiTable shifted_to_ideal() const {
        BettiTable out(Subject::Ideal);
        for (const auto& [ij, v] : entries_)
            if (ij.first >= 1) out.add(ij.first - 1, ij.second, v);
        return out;
    }

    /**
     * Macaulay-style table: columns are i, rows are j - i, zeros print as '.'.
     *
     *            0  1  2
     *     total: 1  3  2
     *         0: 1  .  .
     *         1: .  3  2
     */
    std::string to_macaulay() const {
        if (entries_.empty()) return "(zero)\n";
        int imax = 0, tmin = INT_MAX, tmax = INT_MIN;
        for (const auto& [ij, v] : entries_) {
            imax = std::max(imax, ij.first);
            tmin = std::min(tmin, ij.second - ij.first);
            tmax = std::max(tmax, ij.second - ij.first);
        }
        std::vector<long> totals(static_cast<std::size_t>(imax + 1), 0);
        for (const auto& [ij, v] : entries_) totals[static_cast<std::size_t>(ij.first)] += v;
        std::size_t width = 1;
        for (long t : totals) width = std::max(width, std::to_string(t).size());
        auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
        std::string out = "       ";
        for (int i = 0; i <= imax; ++i) out += cell(std::to_string(i));
        out += "\ntotal:";
        out += ' ';
        for (long t : totals) out += cell(std::to_string(t));
        out += '\n';
        for (int t = tmin; t <= tmax; ++t) {
            std::string label = std::to_string(t) + ":";
            out += std::string(7 - std::min<std::size_t>(7, label.size()), ' ') + label;
            for (int i = 0; i <= imax; ++i) {
                const long v = (*this)(i, i + t);
                out += cell(v == 0 ? "." : std::to_string(v));
            }
            out += '\n';
        }
        return out;
    }

    /// {"subject": ..., "entries": [{"i","j","value"}, ...]} in (i, j) order.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["subject"] = subject_name();
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& [ij, v] : entries_) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
        return j;
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

private:
    Subject subject_ = Subject::FaceRing;
    std::map<std::pair<int, int>, long> entries_;
};

/**
 * Hochster's formula: β_{i,j}(k[Δ]) = Σ_{W ⊆ [n], #W = j} dim H̃_{j-i-1}(Δ_W; k).
 * `max_index` truncates the table to i <= max_index.
 */
inline BettiTable betti_face_ring(const SimplicialComplex& c, const FieldSpec& field = {},
                                  const Limits& limits = {}, int max_index = INT_MAX) {
    if (c.is_void()) throw InputError("Betti numbers of the void complex");
    require_cap("max_hochster_vertices", limits.max_hochster_vertices, c.n());
    BettiTable table(BettiTable::Subject::FaceRing);
    for_each_subset(Face::full(c.n()), [&](Face w) {
        const int j = w.size();
        const HomologyVector h = reduced_homology(restriction(c, w), field, limits);
        for (int q = -1; q <= h.top(); ++q) {
            const int i = j - q - 1;
            if (i <= max_index) table.add(i, j, h[q]);
        }
    });
    return table;
}

/// β_{i,j}(I) via β_{i+1,j} of the face ring of the complex with I_Δ = I.
inline BettiTable betti_ideal(const SquarefreeIdeal& I, const FieldSpec& field = {}, const Limits& limits = {},
                              int max_index = INT_MAX) {
    if (I.is_zero()) throw InputError("Betti numbers of the zero ideal");
    const int face_ring_max = max_index == INT_MAX ? INT_MAX : max_index + 1;
    const BettiTable t = betti_face_ring(complex_of_ideal(I), field, limits, face_ring_max).shifted_to_ideal();
    for (const auto& [deg, count] : I.degree_histogram())
        if (t(0, deg) != count) throw std::logic_error("betti_ideal: β_0 does not match the generators");
    return t;
}

namespace detail {

/**
 * Betti numbers of a monomial module M ⊆ R or R/J from Koszul homology,
 * multidegree by multidegree. `in_basis(a)` says whether x^a is a nonzero
 * basis monomial of M. Multidegrees range over {0, .., max_exp}^n.
 */
inline BettiTable koszul(int n, const std::function<bool(const std::vector<int>&)>& in_basis, int max_exp,
                         const FieldSpec& field, BettiTable::Subject subject) {
    BettiTable table(subject);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto shifted_in_basis = [&](Face remove) {
        std::vector<int> b = a;
        bool ok = true;
        remove.for_each([&](int v) {
            if (--b[v - 1] < 0) ok = false;
        });
        return ok && in_basis(b);
    };
    while (true) {
        Face supp;
        int total = 0;
        for (int k = 0; k < n; ++k) {
            if (a[k] > 0) supp.insert(k + 1);
            total += a[k];
        }
        // chains[i] = subsets A ⊆ supp(a), #A = i, with x^{a - e_A} ∈ M
        std::vector<std::vector<Face>> chains(static_cast<std::size_t>(supp.size() + 1));
        for_each_subset(supp, [&](Face s) {
            if (shifted_in_basis(s)) chains[static_cast<std::size_t>(s.size())].push_back(s);
        });
        for (auto& level : chains) std::sort(level.begin(), level.end());
        // d_i : K_i -> K_{i-1}, e_A ⊗ m -> Σ_k ± e_{A\k} ⊗ x_k m
        std::vector<long> rank(chains.size() + 1, 0);
        for (std::size_t i = 1; i < chains.size(); ++i) {
            const auto& src = chains[i];
            const auto& tgt = chains[i - 1];
            SparseMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
            for (std::size_t c = 0; c < src.size(); ++c) {
                int pos = 0;
                src[c].for_each([&](int v) {
                    const Face smaller = src[c].without(v);
                    auto it = std::lower_bound(tgt.begin(), tgt.end(), smaller);
                    if (it != tgt.end() && *it == smaller)
                        m.columns[c].emplace_back(static_cast<int>(it - tgt.begin()), pos % 2 == 0 ? 1 : -1);
                    ++pos;
                });
                std::sort(m.columns[c].begin(), m.columns[c].end());
            }
            rank[i] = static_cast<long>(exact_rank(m, field));
        }
        for (std::size_t i = 0; i < chains.size(); ++i)
            table.add(static_cast<int>(i), total,
                      static_cast<long>(chains[i].size()) - rank[i] - rank[i + 1]);
        int k = 0;
        while (k < n && a[k] == max_exp) a[k++] = 0;
        if (k == n) break;
        ++a[k];
    }
    return table;
}

}  // namespace detail

/// Koszul-homology Betti numbers of k[Δ]; an oracle independent of Hochster's formula.
inline BettiTable koszul_betti(const SimplicialComplex& c, const FieldSpec& field = {}, const Limits& limits = {}) {
    if (c.is_void()) throw InputError("Betti numbers of the void complex");
    require_cap("max_koszul_vertices", limits.max_koszul_vertices, c.n());
    auto in_basis = [&](const std::vector<int>& a) {
        Face supp;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > 0) supp.insert(static_cast<int>(k) + 1);
        return c.contains(supp);
    };
    return detail::koszul(c.n(), in_basis, 2, field, BettiTable::Subject::FaceRing);
}

/// Koszul-homology Betti numbers of the ideal I itself.
inline BettiTable koszul_betti(const SquarefreeIdeal& I, const FieldSpec& field = {}, const Limits& limits = {}) {
    if (I.is_zero()) throw InputError("Betti numbers of the zero ideal");
    require_cap("max_koszul_vertices", limits.max_koszul_vertices, I.n());
    auto in_basis = [&](const std::vector<int>& a) {
        return std::any_of(I.generators().begin(), I.generators().end(), [&](Face g) {
            bool divides = true;
            g.for_each([&](int v) {
                if (a[static_cast<std::size_t>(v - 1)] == 0) divides = false;
            });
            return divides;
        });
    };
    return detail::koszul(I.n(), in_basis, 2, field, BettiTable::Subject::Ideal);
}

/**
 * Linear in the first r steps: with d the smallest generator degree,
 * β_{i,j}(I) = 0 for 0 <= i < r unless j = i + d. Generators in two degrees
 * already fail at i = 0. The zero ideal passes vacuously.
 */
inline CheckReport is_linear_first_r(const SquarefreeIdeal& I, int r, const FieldSpec& field = {},
                                     const Limits& limits = {}) {
    if (r < 1) throw InputError("r must be >= 1");
    CheckReport rep = CheckReport::pass("linear-first-r", r, field);
    if (I.is_zero()) return rep;
    const int d = I.degree_histogram().begin()->first;
    const BettiTable t = betti_ideal(I, field, limits, r - 1);
    for (const auto& [ij, v] : t.entries()) {
        const auto [i, j] = ij;
        if (i < r && j != i + d) {
            Witness w{.reason = "nonlinear-betti-number", .betti_i = i, .betti_j = j};
            w.detail = "beta=" + std::to_string(v) + " d=" + std::to_string(d);
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

/// Squarefree componentwise linear in the first r steps: every nonzero I_[j] is linear in the first r steps.
inline CheckReport is_cw_linear_first_r(const SquarefreeIdeal& I, int r, const FieldSpec& field = {},
                                        const Limits& limits = {}) {
    if (r < 1) throw InputError("r must be >= 1");
    CheckReport rep = CheckReport::pass("componentwise-linear-first-r", r, field);
    for (int j = 0; j <= I.n(); ++j) {
        const SquarefreeIdeal comp = degree_component(I, j);
        if (comp.is_zero()) continue;
        const CheckReport inner = is_linear_first_r(comp, r, field, limits);
        if (!inner.verdict) {
            Witness w = *inner.witness;
            w.reason = "component-not-linear";
            w.degree = j;
            return rep.fail(std::move(w));
        }
    }
    return rep;
}

struct DepthInfo {
    int pd = 0;
    int depth = 0;
};

/// pd = max{i : β_{i,j}(k[Δ]) ≠ 0}, depth = n - pd (Auslander-Buchsbaum).
inline DepthInfo pd_and_depth(const SimplicialComplex& c, const FieldSpec& field = {}, const Limits& limits = {}) {
    const BettiTable t = betti_face_ring(c, field, limits);
    DepthInfo info{.pd = t.max_index(), .depth = c.n() - t.max_index()};
    if (info.depth > c.dim() + 1) throw std::logic_error("pd_and_depth: depth exceeds Krull dimension");
    return info;
}

}  // namespace seqsr
