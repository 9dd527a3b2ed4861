#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqsr/field.hpp"

namespace seqsr {

/// Sparse integer matrix stored column-wise; each column lists (row, value)
/// with strictly increasing rows and nonzero values.
struct SparseMatrix {
    using Entry = std::pair<int, std::int64_t>;

    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    std::int64_t at(int r, int c) const {
        const auto& col = columns[static_cast<std::size_t>(c)];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, int row) { return e.first < row; });
        return (it != col.end() && it->first == r) ? it->second : 0;
    }

    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& c : columns) k += c.size();
        return k;
    }
};

/// Dense integer product a*b (for invariant checks on small matrices).
inline std::vector<std::vector<std::int64_t>> multiply_dense(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(a.rows),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(b.cols), 0));
    for (int j = 0; j < b.cols; ++j)
        for (const auto& [k, bv] : b.columns[static_cast<std::size_t>(j)])
            for (const auto& [i, av] : a.columns[static_cast<std::size_t>(k)]) out[i][j] += av * bv;
    return out;
}

namespace detail {

struct Overflow {};

template <class Int>
using SparseVec = std::vector<std::pair<int, Int>>;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
    return a * b;
}
inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
    return a - b;
}
inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int abs_gcd(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Index of the shortest vector; ties go to the earliest.
template <class Vec>
std::size_t shortest(const std::vector<Vec>& vs) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < vs.size(); ++k)
        if (vs[k].size() < vs[best].size()) best = k;
    return best;
}

/**
 * Fraction-free elimination over the integers: the returned rank is the rank
 * over Q. Each update is v <- a*v - b*p followed by division by the content
 * of v, so entries stay small on boundary-type matrices.
 */
template <class Int>
std::size_t fraction_free_rank(std::vector<SparseVec<Int>> vecs) {
    std::size_t rank = 0;
    while (!vecs.empty()) {
        const std::size_t pi = shortest(vecs);
        SparseVec<Int> pivot = std::move(vecs[pi]);
        vecs[pi] = std::move(vecs.back());
        vecs.pop_back();
        ++rank;
        const int prow = pivot.front().first;
        const Int a = pivot.front().second;
        for (std::size_t k = 0; k < vecs.size();) {
            SparseVec<Int>& v = vecs[k];
            auto hit = std::lower_bound(v.begin(), v.end(), prow,
                                        [](const auto& e, int row) { return e.first < row; });
            if (hit == v.end() || hit->first != prow) {
                ++k;
                continue;
            }
            const Int b = hit->second;
            SparseVec<Int> out;
            out.reserve(v.size() + pivot.size());
            auto i = v.begin();
            auto j = pivot.begin();
            while (i != v.end() || j != pivot.end()) {
                if (j == pivot.end() || (i != v.end() && i->first < j->first)) {
                    out.emplace_back(i->first, checked_mul(a, i->second));
                    ++i;
                } else if (i == v.end() || j->first < i->first) {
                    out.emplace_back(j->first, checked_sub(Int{0}, checked_mul(b, j->second)));
                    ++j;
                } else {
                    Int val = checked_sub(checked_mul(a, i->second), checked_mul(b, j->second));
                    if (val != 0) out.emplace_back(i->first, std::move(val));
                    ++i;
                    ++j;
                }
            }
            if (out.empty()) {
                vecs[k] = std::move(vecs.back());
                vecs.pop_back();
                continue;
            }
            Int g{0};
            for (const auto& e : out) g = abs_gcd(g, e.second);
            if (g != 1)
                for (auto& e : out) e.second /= g;
            v = std::move(out);
            ++k;
        }
    }
    return rank;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

/// Gaussian elimination over GF(p).
inline std::size_t modular_rank(std::vector<SparseVec<std::int64_t>> vecs, std::int64_t p) {
    for (auto& v : vecs) {
        SparseVec<std::int64_t> out;
        for (auto [r, x] : v) {
            x %= p;
            if (x < 0) x += p;
            if (x != 0) out.emplace_back(r, x);
        }
        v = std::move(out);
    }
    std::erase_if(vecs, [](const auto& v) { return v.empty(); });
    std::size_t rank = 0;
    while (!vecs.empty()) {
        const std::size_t pi = shortest(vecs);
        SparseVec<std::int64_t> pivot = std::move(vecs[pi]);
        vecs[pi] = std::move(vecs.back());
        vecs.pop_back();
        ++rank;
        const int prow = pivot.front().first;
        const std::int64_t inv = mod_inverse(pivot.front().second, p);
        for (std::size_t k = 0; k < vecs.size();) {
            auto& v = vecs[k];
            auto hit = std::lower_bound(v.begin(), v.end(), prow,
                                        [](const auto& e, int row) { return e.first < row; });
            if (hit == v.end() || hit->first != prow) {
                ++k;
                continue;
            }
            const std::int64_t factor = hit->second * inv % p;
            SparseVec<std::int64_t> out;
            out.reserve(v.size() + pivot.size());
            auto i = v.begin();
            auto j = pivot.begin();
            while (i != v.end() || j != pivot.end()) {
                if (j == pivot.end() || (i != v.end() && i->first < j->first)) {
                    out.push_back(*i++);
                } else if (i == v.end() || j->first < i->first) {
                    out.emplace_back(j->first, (p - factor * j->second % p) % p);
                    ++j;
                } else {
                    const std::int64_t val = ((i->second - factor * j->second % p) % p + p) % p;
                    if (val != 0) out.emplace_back(i->first, val);
                    ++i;
                    ++j;
                }
            }
            if (out.empty()) {
                vecs[k] = std::move(vecs.back());
                vecs.pop_back();
                continue;
            }
            v = std::move(out);
            ++k;
        }
    }
    return rank;
}

}  // namespace detail

/// Exact rank of an integer matrix over the given field.
inline std::size_t exact_rank(const SparseMatrix& m, const FieldSpec& field) {
    std::vector<detail::SparseVec<std::int64_t>> vecs;
    vecs.reserve(m.columns.size());
    for (const auto& c : m.columns)
        if (!c.empty()) vecs.push_back(c);
    if (vecs.empty()) return 0;
    if (!field.is_rational()) return detail::modular_rank(std::move(vecs), field.characteristic());
    try {
        return detail::fraction_free_rank(vecs);
    } catch (const detail::Overflow&) {
        std::vector<detail::SparseVec<boost::multiprecision::cpp_int>> big;
        big.reserve(vecs.size());
        for (const auto& v : vecs) {
            detail::SparseVec<boost::multiprecision::cpp_int> bv;
            for (const auto& [r, x] : v) bv.emplace_back(r, x);
            big.push_back(std::move(bv));
        }
        return detail::fraction_free_rank(std::move(big));
    }
}

}  // namespace seqsr
