#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcgraph/errors.hpp"

namespace vcgraph {


/// Binomial coefficient, saturating at UINT64_MAX.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        // r * num / i is exact at every step; guard the multiplication.
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

/// q^d, saturating.
constexpr std::uint64_t int_pow(std::uint64_t q, std::uint64_t d) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < d; ++i) {
        if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

inline void validate_subset(std::span<const int> s, int m) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > m)
            throw InvalidArgument("subset element " + std::to_string(s[i]) + " outside 1.." + std::to_string(m));
        if (i > 0 && s[i] <= s[i - 1]) throw InvalidArgument("subset label must be strictly increasing");
    }
}

inline void validate_tuple(std::span<const int> t, int q) {
    for (int x : t)
        if (x < 0 || x >= q)
            throw InvalidArgument("tuple entry " + std::to_string(x) + " outside 0.." + std::to_string(q - 1));
}

/// Colexicographic rank of a sorted subset of {1..m}: sum of C(e_i - 1, i).
inline std::uint64_t rank_subset_elements(std::span<const int> s, int m) {
    validate_subset(s, m);
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binomial(static_cast<std::uint64_t>(s[i] - 1), i + 1);
    return r;
}

inline std::vector<int> unrank_subset_elements(std::uint64_t rank, int m, int k) {
    if (k < 0 || k > m) throw InvalidArgument("subset size out of range");
    if (rank >= binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)))
        throw InvalidArgument("subset rank out of range");
    std::vector<int> s(static_cast<std::size_t>(k));
    int hi = m;
    for (int i = k; i >= 1; --i) {
        // largest e with C(e-1, i) <= rank
        int e = hi;
        while (binomial(static_cast<std::uint64_t>(e - 1), static_cast<std::uint64_t>(i)) > rank) --e;
        s[static_cast<std::size_t>(i - 1)] = e;
        rank -= binomial(static_cast<std::uint64_t>(e - 1), static_cast<std::uint64_t>(i));
        hi = e - 1;
    }
    return s;
}

/// Little-endian base-q rank: entry 0 is the least significant digit.
inline std::uint64_t rank_tuple_entries(std::span<const int> t, int q) {
    validate_tuple(t, q);
    std::uint64_t r = 0;
    for (std::size_t i = t.size(); i-- > 0;) r = r * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(t[i]);
    return r;
}

inline std::vector<int> unrank_tuple_entries(std::uint64_t rank, int d, int q) {
    if (d < 0 || q < 1) throw InvalidArgument("tuple shape out of range");
    if (rank >= int_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(d)))
        throw InvalidArgument("tuple rank out of range");
    std::vector<int> t(static_cast<std::size_t>(d));
    for (auto& x : t) {
        x = static_cast<int>(rank % static_cast<std::uint64_t>(q));
        rank /= static_cast<std::uint64_t>(q);
    }
    return t;
}

/// Colex order on sorted index lists of equal length: compare from the
/// largest element down.
template <typename T>
bool colex_less(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

template <typename T>
bool colex_less(const std::vector<T>& a, const std::vector<T>& b) {
    return colex_less(std::span<const T>(a), std::span<const T>(b));
}

/// Visits every k-subset of {0..n-1} in colex order as a sorted index vector.
/// The visitor returns false to stop early.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(std::as_const(c))) return;
        int i = 0;
        while (i < k && c[static_cast<std::size_t>(i)] + 1 ==
                            (i + 1 < k ? c[static_cast<std::size_t>(i + 1)] : n))
            ++i;
        if (i == k) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
    }
}

}  // namespace vcgraph
