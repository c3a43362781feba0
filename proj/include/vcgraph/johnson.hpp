#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcgraph/construction.hpp"
#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/labels.hpp"

namespace vcgraph {

namespace detail {

inline void check_label(const SubsetLabel& s) {
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (s.elements[i] < 1) throw InvalidArgument("subset label " + to_string(DomainLabel{s}) + " has element < 1");
        if (i > 0 && s.elements[i] <= s.elements[i - 1])
            throw InvalidArgument("subset label " + to_string(DomainLabel{s}) + " is not strictly increasing");
    }
}

inline void check_label(const SubsetLabel& s, int m) {
    check_label(s);
    if (!s.elements.empty() && s.elements.back() > m)
        throw InvalidArgument("subset label " + to_string(DomainLabel{s}) + " exceeds m = " + std::to_string(m));
}

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline SubsetLabel swap_elements(const SubsetLabel& base, std::initializer_list<int> removed,
                                 std::initializer_list<int> added) {
    std::vector<int> out;
    for (int e : base.elements)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
    out.insert(out.end(), added.begin(), added.end());
    std::sort(out.begin(), out.end());
    return {out};
}

inline std::vector<int> complement(const SubsetLabel& v, int m) {
    std::vector<int> out;
    for (int x = 1, i = 0; x <= m; ++x) {
        if (i < static_cast<int>(v.elements.size()) && v.elements[static_cast<std::size_t>(i)] == x)
            ++i;
        else
            out.push_back(x);
    }
    return out;
}

}  // namespace detail

/// |u xor v| / 2, the graph distance in any Johnson graph containing both.
inline std::size_t johnson_distance(const SubsetLabel& u, const SubsetLabel& v) {
    detail::check_label(u);
    detail::check_label(v);
    if (u.size() != v.size()) throw InvalidArgument("johnson_distance: labels differ in size");
    return detail::set_minus(u.elements, v.elements).size();
}

/// Neighbour of `base` written as (base \ removed) + added, one or two
/// elements exchanged.
struct JohnsonMove {
    SubsetLabel base;
    std::vector<int> removed;
    std::vector<int> added;

    SubsetLabel target() const {
        std::vector<int> out = detail::set_minus(base.elements, removed);
        out.insert(out.end(), added.begin(), added.end());
        std::sort(out.begin(), out.end());
        return {out};
    }
};

/// The move taking v to u (|removed| = distance).
inline JohnsonMove johnson_move(const SubsetLabel& v, const SubsetLabel& u) {
    johnson_distance(v, u);
    return {v, detail::set_minus(v.elements, u.elements), detail::set_minus(u.elements, v.elements)};
}

/// N(u) & N(v) in J(m,k), built from the labels alone.
inline std::vector<SubsetLabel> johnson_common_neighbors(const SubsetLabel& u, const SubsetLabel& v, int m) {
    detail::check_label(u, m);
    detail::check_label(v, m);
    const std::size_t dist = johnson_distance(u, v);
    std::vector<SubsetLabel> out;
    const auto outside = detail::complement(v, m);
    if (dist == 0) {
        for (int a : v.elements)
            for (int x : outside) out.push_back(detail::swap_elements(v, {a}, {x}));
    } else if (dist == 1) {
        // u = (v \ {a}) + {x}: exactly one of (removed == a, added == x).
        const auto mv = johnson_move(v, u);
        const int a = mv.removed[0], x = mv.added[0];
        for (int z : outside)
            if (z != x) out.push_back(detail::swap_elements(v, {a}, {z}));
        for (int c : v.elements)
            if (c != a) out.push_back(detail::swap_elements(v, {c}, {x}));
    } else if (dist == 2) {
        const auto mv = johnson_move(v, u);
        for (int c : mv.removed)
            for (int z : mv.added) out.push_back(detail::swap_elements(v, {c}, {z}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// |N(u) & N(v)| in J(m,k) by distance: k(m-k), m-2, 4, then 0.
inline std::size_t johnson_intersection_size(const SubsetLabel& u, const SubsetLabel& v, int m, int k) {
    detail::check_label(u, m);
    detail::check_label(v, m);
    if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k)
        throw InvalidArgument("johnson_intersection_size: labels are not k-subsets");
    switch (johnson_distance(u, v)) {
    case 0: return static_cast<std::size_t>(k * (m - k));
    case 1: return static_cast<std::size_t>(m - 2);
    case 2: return 4;
    default: return 0;
    }
}

/// Bijection N(v) -> R(k, m-k): (v \ {a}) + {x} goes to row = position of a
/// in v, column = position of x in the complement of v.
struct RookEmbedding {
    SubsetLabel center;
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<SubsetLabel, PairLabel>> cells;
};

inline RookEmbedding rook_isomorphism(int m, int k, const SubsetLabel& v) {
    detail::check_label(v, m);
    if (static_cast<int>(v.size()) != k) throw InvalidArgument("rook_isomorphism: center is not a k-subset");
    RookEmbedding e{v, k, m - k, {}};
    const auto outside = detail::complement(v, m);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m - k; ++c)
            e.cells.emplace_back(
                detail::swap_elements(v, {v.elements[static_cast<std::size_t>(r)]}, {outside[static_cast<std::size_t>(c)]}),
                PairLabel{r, c});
    return e;
}

/// Checks that the embedding is an isomorphism from G[N(v)] onto R(k, m-k),
/// with G = J(m,k) given explicitly.
inline bool verify_rook_isomorphism(const Graph& johnson, const RookEmbedding& e) {
    const Graph rook = make_rook(e.rows, e.cols);
    const VertexId center = johnson.vertex_of(e.center);
    const auto nbrs = johnson.neighbors(center).to_vector();
    if (nbrs.size() != e.cells.size()) return false;
    std::map<VertexId, VertexId> to_rook;
    for (const auto& [label, cell] : e.cells) {
        auto id = johnson.find_vertex(label);
        if (!id || !johnson.adjacent(center, *id)) return false;
        to_rook[*id] = static_cast<VertexId>(cell.row * e.cols + cell.col);
    }
    if (to_rook.size() != nbrs.size()) return false;
    const Graph sub = induced_subgraph(johnson, std::span<const VertexId>(nbrs));
    std::vector<VertexId> map(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) map[i] = to_rook.at(nbrs[i]);
    return is_isomorphism(sub, rook, map);
}

/// Cell of a neighbour of v: (removed element a, added element x).
struct NeighborCell {
    int removed = 0;
    int added = 0;
};

/// Orbit of a 4-subset of N(v) under the automorphisms of J(m,k) fixing v.
struct CaseId {
    int value = 0;  // 1..16
    std::vector<int> a_partition;
    std::vector<int> x_partition;
    /// Canonical cells: (class of removed element, class of added element)
    /// for each vertex, lexicographically least over relabellings.
    std::array<std::pair<int, int>, 4> alignment{};

    bool operator==(const CaseId&) const = default;

    /// Configurations IX-XVI are shattered by the edge relation.
    bool shatters() const noexcept { return value >= 9; }
};

inline std::string roman(int value) {
    static const char* const names[] = {"",   "I",   "II",   "III",  "IV", "V",   "VI",   "VII",  "VIII",
                                        "IX", "X",   "XI",   "XII",  "XIII", "XIV", "XV", "XVI"};
    if (value < 1 || value > 16) throw InvalidArgument("case number out of range");
    return names[value];
}

namespace detail {

using CellPattern = std::array<std::pair<int, int>, 4>;

inline CellPattern canonical_pattern(const std::array<NeighborCell, 4>& cells) {
    std::array<int, 4> order{0, 1, 2, 3};
    std::optional<CellPattern> best;
    do {
        std::map<int, int> a_class, x_class;
        CellPattern p{};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& c = cells[static_cast<std::size_t>(order[i])];
            auto ai = a_class.try_emplace(c.removed, static_cast<int>(a_class.size())).first->second;
            auto xi = x_class.try_emplace(c.added, static_cast<int>(x_class.size())).first->second;
            p[i] = {ai, xi};
        }
        if (!best || p < *best) best = p;
    } while (std::next_permutation(order.begin(), order.end()));
    return *best;
}

// Case representatives in listing order, as (removed index, added index)
// for v_1..v_4 with v_i = (v \ {a_r}) + {x_c}.
inline const std::array<std::array<NeighborCell, 4>, 16>& case_representatives() {
    static const std::array<std::array<NeighborCell, 4>, 16> reps{{
        {{{1, 1}, {2, 1}, {3, 1}, {4, 2}}},  // I    x: 3+1, a: 1+1+1+1
        {{{1, 1}, {2, 1}, {1, 2}, {2, 2}}},  // II   x: 2+2, a: 2+2 grid
        {{{1, 1}, {2, 1}, {1, 2}, {3, 3}}},  // III  x: 2+1+1, a_1 = a_3
        {{{1, 1}, {2, 1}, {3, 2}, {3, 3}}},  // IV   x: 2+1+1, a_3 = a_4
        {{{1, 1}, {2, 1}, {3, 2}, {4, 3}}},  // V    x: 2+1+1, a: 1+1+1+1
        {{{1, 1}, {1, 2}, {1, 3}, {2, 4}}},  // VI   x: 1+1+1+1, a: 3+1
        {{{1, 1}, {1, 2}, {2, 3}, {3, 4}}},  // VII  x: 1+1+1+1, a: 2+1+1
        {{{1, 1}, {2, 2}, {3, 3}, {4, 4}}},  // VIII x: 1+1+1+1, a: 1+1+1+1
        {{{1, 1}, {2, 1}, {3, 1}, {4, 1}}},  // IX   x: 4
        {{{1, 1}, {2, 1}, {3, 1}, {1, 2}}},  // X    x: 3+1, a_1 = a_4
        {{{1, 1}, {2, 1}, {1, 2}, {3, 2}}},  // XI   x: 2+2, a: 2+1+1
        {{{1, 1}, {2, 1}, {3, 2}, {4, 2}}},  // XII  x: 2+2, a: 1+1+1+1
        {{{1, 1}, {2, 1}, {1, 2}, {1, 3}}},  // XIII x: 2+1+1, a: 3+1
        {{{1, 1}, {2, 1}, {1, 2}, {2, 3}}},  // XIV  x: 2+1+1, a: 2+2
        {{{1, 1}, {1, 2}, {1, 3}, {1, 4}}},  // XV   x: 1+1+1+1, a: 4
        {{{1, 1}, {1, 2}, {2, 3}, {2, 4}}},  // XVI  x: 1+1+1+1, a: 2+2
    }};
    return reps;
}

inline const std::map<CellPattern, int>& case_table() {
    static const std::map<CellPattern, int> table = [] {
        std::map<CellPattern, int> t;
        const auto& reps = case_representatives();
        for (std::size_t i = 0; i < reps.size(); ++i) t.emplace(canonical_pattern(reps[i]), static_cast<int>(i) + 1);
        return t;
    }();
    return table;
}

inline std::vector<int> class_sizes(const std::array<NeighborCell, 4>& cells, bool removed) {
    std::map<int, int> counts;
    for (const auto& c : cells) ++counts[removed ? c.removed : c.added];
    std::vector<int> sizes;
    for (const auto& [key, n] : counts) sizes.push_back(n);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace detail

/// Case of four distinct cells of a rook grid (removed, added) pairs.
inline CaseId classify_cells(const std::array<NeighborCell, 4>& cells) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (cells[i].removed == cells[j].removed && cells[i].added == cells[j].added)
                throw InvalidArgument("classify: the four vertices must be distinct");
    CaseId id;
    id.alignment = detail::canonical_pattern(cells);
    id.value = detail::case_table().at(id.alignment);
    id.a_partition = detail::class_sizes(cells, true);
    id.x_partition = detail::class_sizes(cells, false);
    return id;
}

/// Case I-XVI of four distinct neighbours of v.
inline CaseId classify_four_subset(const SubsetLabel& v, const std::array<SubsetLabel, 4>& quad) {
    std::array<NeighborCell, 4> cells{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (quad[i].size() != v.size() || johnson_distance(v, quad[i]) != 1)
            throw InvalidArgument("classify: " + to_string(DomainLabel{quad[i]}) + " is not a neighbour of " +
                                  to_string(DomainLabel{v}));
        const auto mv = johnson_move(v, quad[i]);
        cells[i] = {mv.removed[0], mv.added[0]};
    }
    return classify_cells(cells);
}

/// True when three of the labels are pairwise at Johnson distance 2.
inline bool has_distance2_triple(std::span<const SubsetLabel> labels) {
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (johnson_distance(labels[i], labels[j]) != 2) continue;
            for (std::size_t l = j + 1; l < n; ++l)
                if (johnson_distance(labels[i], labels[l]) == 2 && johnson_distance(labels[j], labels[l]) == 2)
                    return true;
        }
    return false;
}

/// Lower-bound construction for the density of J(m,k): v = {1..k},
/// x_i = k + i, A = {(v \ {i}) + {x_i}}, and (v \ {i}) + {x_j} meets A in
/// exactly {v_i, v_j}. Witnesses are checked against J(m,k) when it fits
/// `opts`.
inline DensityConstruction johnson_density_witness(int m, int k, const GraphOptions& opts = {}) {
    if (k < 1 || m <= 2 * k) throw InvalidArgument("johnson_density_witness needs k >= 1 and m > 2k");
    DensityConstruction c;
    c.graph = {Family::Johnson, {m, k}};
    SubsetLabel v;
    for (int i = 1; i <= k; ++i) v.elements.push_back(i);
    for (int i = 1; i <= k; ++i) c.base_set.emplace_back(detail::swap_elements(v, {i}, {k + i}));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            c.pairs.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                               DomainLabel{detail::swap_elements(v, {i}, {k + j})}, false});
    verify_pairs(c, make_johnson(m, k, opts));
    return c;
}

}  // namespace vcgraph
