#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "seqsr/errors.hpp"

namespace seqsr {

/// Largest ground set a Face can address.
inline constexpr int kMaxGroundSet = 64;

/**
 * A finite set of vertex labels drawn from 1..64, stored as a bitmask
 * (label v occupies bit v-1). The empty face is an ordinary value.
 *
 * Faces are ordered lexicographically on their ascending vertex lists, so
 * the empty face precedes everything and {1,2} < {1,2,5} < {1,3}.
 */
class Face {
public:
    constexpr Face() = default;

    Face(std::initializer_list<int> labels) {
        for (int v : labels) insert(v);
    }

    static Face from_labels(const std::vector<int>& labels) {
        Face f;
        for (int v : labels) f.insert(v);
        return f;
    }

    static constexpr Face from_bits(std::uint64_t bits) {
        Face f;
        f.bits_ = bits;
        return f;
    }

    /// {1, ..., n}
    static constexpr Face full(int n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    static constexpr Face singleton(int v) { return from_bits(std::uint64_t{1} << (v - 1)); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    /// size() - 1; the empty face has dimension -1.
    constexpr int dim() const noexcept { return size() - 1; }

    constexpr bool contains(int v) const noexcept {
        return v >= 1 && v <= kMaxGroundSet && ((bits_ >> (v - 1)) & 1U);
    }
    constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Largest label, 0 for the empty face.
    constexpr int max_label() const noexcept { return 64 - std::countl_zero(bits_); }
    /// Smallest label, 0 for the empty face.
    constexpr int min_label() const noexcept { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

    void insert(int v) {
        if (v < 1 || v > kMaxGroundSet)
            throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxGroundSet));
        bits_ |= std::uint64_t{1} << (v - 1);
    }

    Face with(int v) const {
        Face f = *this;
        f.insert(v);
        return f;
    }
    constexpr Face without(int v) const { return from_bits(bits_ & ~(std::uint64_t{1} << (v - 1))); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// Calls fn(label) in ascending order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) fn(std::countr_zero(b) + 1);
    }

    /// "{1,3,5}", or "{}" for the empty face.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    friend constexpr Face operator|(Face a, Face b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return from_bits(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr Face operator-(Face a, Face b) { return from_bits(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(Face a, Face b) = default;

    friend constexpr bool operator<(Face a, Face b) noexcept {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        const int k = std::countr_zero(diff);
        // Both agree below k. Whoever owns k continues with k; the other either
        // continues with something larger (and loses) or has already ended (and wins).
        if ((a.bits_ >> k) & 1U) return (b.bits_ >> k) != 0;
        return (a.bits_ >> k) == 0;
    }
    friend constexpr bool operator>(Face a, Face b) noexcept { return b < a; }
    friend constexpr bool operator<=(Face a, Face b) noexcept { return !(b < a); }
    friend constexpr bool operator>=(Face a, Face b) noexcept { return !(a < b); }

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of `f` with exactly k elements.
template <class Fn>
void for_each_k_subset(Face f, int k, Fn&& fn) {
    const std::vector<int> v = f.labels();
    const int m = static_cast<int>(v.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx) bits |= std::uint64_t{1} << (v[i] - 1);
        fn(Face::from_bits(bits));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls fn(sub) for every subset of `f` (including the empty set and f).
template <class Fn>
void for_each_subset(Face f, Fn&& fn) {
    const std::uint64_t mask = f.bits();
    std::uint64_t sub = 0;
    do {
        fn(Face::from_bits(sub));
        sub = (sub - mask) & mask;
    } while (sub != 0);
}

}  // namespace seqsr

template <>
struct std::hash<seqsr::Face> {
    std::size_t operator()(seqsr::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
