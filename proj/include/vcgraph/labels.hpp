#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vcgraph/combinatorics.hpp"

namespace vcgraph {

/// Sorted subset of {1..m}; Johnson vertices and points of a subdivided K_n.
struct SubsetLabel {
    std::vector<int> elements;
    auto operator<=>(const SubsetLabel&) const = default;
    std::size_t size() const noexcept { return elements.size(); }
};

/// d-tuple over {0..q-1}; Hamming vertices.
struct TupleLabel {
    std::vector<int> entries;
    auto operator<=>(const TupleLabel&) const = default;
    std::size_t size() const noexcept { return entries.size(); }
};

/// (row, column) cell of a rook's graph, both 0-based.
struct PairLabel {
    int row = 0;
    int col = 0;
    auto operator<=>(const PairLabel&) const = default;
};

/// Plain vertex index, used when a family carries no structure.
struct IndexLabel {
    std::size_t index = 0;
    auto operator<=>(const IndexLabel&) const = default;
};

using DomainLabel = std::variant<IndexLabel, SubsetLabel, TupleLabel, PairLabel>;

inline std::uint64_t rank_subset(const SubsetLabel& s, int m) { return rank_subset_elements(s.elements, m); }
inline SubsetLabel unrank_subset(std::uint64_t rank, int m, int k) { return {unrank_subset_elements(rank, m, k)}; }
inline std::uint64_t rank_tuple(const TupleLabel& t, int q) { return rank_tuple_entries(t.entries, q); }
inline TupleLabel unrank_tuple(std::uint64_t rank, int d, int q) { return {unrank_tuple_entries(rank, d, q)}; }

namespace detail {
inline std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}
}  // namespace detail

/// Human-readable form: {1,3} for subsets, (0,1,2) for tuples, r1c2 for cells.
inline std::string to_string(const DomainLabel& label) {
    struct Visitor {
        std::string operator()(const IndexLabel& l) const { return std::to_string(l.index); }
        std::string operator()(const SubsetLabel& l) const { return "{" + detail::join_ints(l.elements) + "}"; }
        std::string operator()(const TupleLabel& l) const { return "(" + detail::join_ints(l.entries) + ")"; }
        std::string operator()(const PairLabel& l) const {
            return "r" + std::to_string(l.row) + "c" + std::to_string(l.col);
        }
    };
    return std::visit(Visitor{}, label);
}

}  // namespace vcgraph
