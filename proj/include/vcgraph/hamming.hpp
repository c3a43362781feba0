#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vcgraph/construction.hpp"
#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/labels.hpp"

namespace vcgraph {

namespace detail {

inline void check_tuples(const TupleLabel& u, const TupleLabel& v) {
    if (u.size() != v.size()) throw InvalidArgument("tuples differ in arity");
}

inline void check_tuples(const TupleLabel& u, const TupleLabel& v, int q) {
    check_tuples(u, v);
    validate_tuple(u.entries, q);
    validate_tuple(v.entries, q);
}

}  // namespace detail

struct HammingPair {
    TupleLabel u;
    TupleLabel v;
    std::vector<std::size_t> differing_coords;
};

inline HammingPair hamming_pair(const TupleLabel& u, const TupleLabel& v) {
    detail::check_tuples(u, v);
    HammingPair p{u, v, {}};
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.entries[i] != v.entries[i]) p.differing_coords.push_back(i);
    return p;
}

inline std::size_t hamming_distance(const TupleLabel& u, const TupleLabel& v) {
    return hamming_pair(u, v).differing_coords.size();
}

/// N(u) & N(v) in H(d,q), built from the labels alone.
inline std::vector<TupleLabel> hamming_common_neighbors(const TupleLabel& u, const TupleLabel& v, int q) {
    detail::check_tuples(u, v, q);
    const auto pair = hamming_pair(u, v);
    const auto& diff = pair.differing_coords;
    std::vector<TupleLabel> out;
    if (diff.empty()) {
        for (std::size_t c = 0; c < u.size(); ++c)
            for (int s = 0; s < q; ++s) {
                if (s == u.entries[c]) continue;
                TupleLabel w = u;
                w.entries[c] = s;
                out.push_back(std::move(w));
            }
    } else if (diff.size() == 1) {
        // The rest of the clique on the differing coordinate.
        const std::size_t i = diff[0];
        for (int s = 0; s < q; ++s) {
            if (s == u.entries[i] || s == v.entries[i]) continue;
            TupleLabel w = u;
            w.entries[i] = s;
            out.push_back(std::move(w));
        }
    } else if (diff.size() == 2) {
        const std::size_t i = diff[0];
        TupleLabel x = v, y = u;
        x.entries[i] = u.entries[i];
        y.entries[i] = v.entries[i];
        out.push_back(std::move(x));
        out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// |N(u) & N(v)| in H(d,q) by distance: d(q-1), q-2, 2, then 0.
inline std::size_t hamming_intersection_size(const TupleLabel& u, const TupleLabel& v, int d, int q) {
    detail::check_tuples(u, v, q);
    if (static_cast<int>(u.size()) != d) throw InvalidArgument("hamming_intersection_size: arity is not d");
    switch (hamming_distance(u, v)) {
    case 0: return static_cast<std::size_t>(d * (q - 1));
    case 1: return static_cast<std::size_t>(q - 2);
    case 2: return 2;
    default: return 0;
    }
}

/// N(v) split by the coordinate in which each neighbour differs from v: d
/// cliques of size q-1.
inline std::vector<std::vector<TupleLabel>> neighborhood_clique_decomposition(int d, int q, const TupleLabel& v) {
    if (static_cast<int>(v.size()) != d) throw InvalidArgument("clique decomposition: arity is not d");
    validate_tuple(v.entries, q);
    std::vector<std::vector<TupleLabel>> parts(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c)
        for (int s = 0; s < q; ++s) {
            if (s == v.entries[static_cast<std::size_t>(c)]) continue;
            TupleLabel w = v;
            w.entries[static_cast<std::size_t>(c)] = s;
            parts[static_cast<std::size_t>(c)].push_back(std::move(w));
        }
    return parts;
}

/// Checks the parts partition N(v) in g, each part is a clique and no edge
/// joins two parts.
inline bool verify_clique_decomposition(const Graph& g, const TupleLabel& v,
                                        const std::vector<std::vector<TupleLabel>>& parts) {
    const VertexId center = g.vertex_of(v);
    std::vector<std::vector<VertexId>> ids(parts.size());
    VertexSet covered(g.num_vertices());
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& l : parts[p]) {
            auto id = g.find_vertex(l);
            if (!id || covered.contains(*id)) return false;
            covered.insert(*id);
            ids[p].push_back(*id);
        }
    if (!(covered == g.neighbors(center))) return false;
    for (std::size_t p = 0; p < ids.size(); ++p)
        for (std::size_t r = 0; r < ids.size(); ++r)
            for (auto a : ids[p])
                for (auto b : ids[r]) {
                    if (a == b) continue;
                    if (g.adjacent(a, b) != (p == r)) return false;
                }
    return true;
}

/// Result of inducing H(d,2) on the vertices at distance 1 or 2 from the
/// all-zeros vertex and matching it against the 1-subdivision of K_d.
struct SubdivisionCheck {
    bool isomorphic = false;
    Graph induced;
    Graph subdivided;
    /// Vertex of H(d,2) behind each induced vertex.
    std::vector<VertexId> source_vertices;
    /// induced vertex -> subdivided K_d vertex.
    std::vector<VertexId> map;
};

inline SubdivisionCheck two_neighborhood_subdivision_check(int d, const GraphOptions& opts = {}) {
    if (d < 2) throw InvalidArgument("two_neighborhood_subdivision_check needs d >= 2");
    const Graph h = make_hamming(d, 2, opts);
    const auto dist = bfs_distances(h, 0);
    SubdivisionCheck out;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (dist[v] == 1 || dist[v] == 2) out.source_vertices.push_back(v);
    out.induced = induced_subgraph(h, std::span<const VertexId>(out.source_vertices));
    out.subdivided = make_subdivided_complete(d, opts);
    // Weight-1 vertex e_i -> original i; weight-2 vertex e_i + e_j -> the
    // subdivision point of {i, j}.
    for (const auto src : out.source_vertices) {
        const auto& t = std::get<TupleLabel>(h.label(src)).entries;
        SubsetLabel support;
        for (std::size_t c = 0; c < t.size(); ++c)
            if (t[c] == 1) support.elements.push_back(static_cast<int>(c) + 1);
        out.map.push_back(out.subdivided.vertex_of(support));
    }
    out.isomorphic = is_isomorphism(out.induced, out.subdivided, out.map);
    return out;
}

/// Lower-bound construction for the density of H(d,q): A = {(c, c, 0, ...)}
/// over the chosen coordinate pair, and (u_first, v_second, 0, ...) meets A
/// in exactly {u, v}.
inline DensityConstruction hamming_density_witness(int d, int q, std::optional<int> size = std::nullopt,
                                                   std::pair<int, int> coords = {0, 1},
                                                   const GraphOptions& opts = {}) {
    if (d < 2) throw InvalidArgument("hamming_density_witness needs d >= 2");
    const int n = size.value_or(q);
    if (n < 0 || n > q) throw InvalidArgument("hamming_density_witness needs |A| <= q");
    if (coords.first == coords.second || coords.first < 0 || coords.second < 0 || coords.first >= d ||
        coords.second >= d)
        throw InvalidArgument("hamming_density_witness needs two distinct coordinates below d");
    const auto first = static_cast<std::size_t>(coords.first);
    const auto second = static_cast<std::size_t>(coords.second);
    DensityConstruction c;
    c.graph = {Family::Hamming, {d, q}};
    for (int s = 0; s < n; ++s) {
        TupleLabel t{std::vector<int>(static_cast<std::size_t>(d), 0)};
        t.entries[first] = s;
        t.entries[second] = s;
        c.base_set.emplace_back(std::move(t));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            TupleLabel w{std::vector<int>(static_cast<std::size_t>(d), 0)};
            w.entries[first] = i;
            w.entries[second] = j;
            c.pairs.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), DomainLabel{w}, false});
        }
    verify_pairs(c, make_hamming(d, q, opts));
    return c;
}

/// Closed form 4n^2 + n of the Hamming shatter-function recursion.
constexpr std::uint64_t hamming_pi_recursion_bound(std::uint64_t n) noexcept { return 4 * n * n + n; }

}  // namespace vcgraph
