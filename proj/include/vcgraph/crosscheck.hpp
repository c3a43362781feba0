#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "vcgraph/graph.hpp"
#include "vcgraph/hamming.hpp"
#include "vcgraph/johnson.hpp"
#include "vcgraph/labels.hpp"

namespace vcgraph {

/// One analytic formula compared against the explicit graph.
struct CheckTally {
    explicit CheckTally(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;

    void record(bool ok, const std::string& what) {
        ++comparisons;
        if (ok) return;
        if (mismatches++ == 0) first_mismatch = what;
    }
};

struct CrossCheckReport {
    FamilyTag graph;
    std::vector<CheckTally> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.mismatches == 0; });
    }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> all_distances(const Graph& g) {
    std::vector<std::vector<std::size_t>> d;
    d.reserve(g.num_vertices());
    for (VertexId u = 0; u < g.num_vertices(); ++u) d.push_back(bfs_distances(g, u));
    return d;
}

template <class Label>
std::vector<Label> common_labels(const Graph& g, VertexId u, VertexId v) {
    std::vector<Label> out;
    (g.neighbors(u) & g.neighbors(v)).for_each([&](VertexId w) { out.push_back(std::get<Label>(g.label(w))); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string pair_text(const Graph& g, VertexId u, VertexId v) {
    return to_string(g.label(u)) + " " + to_string(g.label(v));
}

}  // namespace detail

/// Distance, intersection sizes, common neighbours and the rook structure of
/// every neighbourhood, over all vertex pairs of J(m,k).
inline CrossCheckReport johnson_cross_check(int m, int k, const GraphOptions& opts = {}) {
    const Graph g = make_johnson(m, k, opts);
    const auto dist = detail::all_distances(g);
    CheckTally distance{"distance"}, inter{"intersection_size"}, common{"common_neighbors"}, rook{"rook_isomorphism"};
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const auto& lu = std::get<SubsetLabel>(g.label(u));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto& lv = std::get<SubsetLabel>(g.label(v));
            const auto where = detail::pair_text(g, u, v);
            distance.record(johnson_distance(lu, lv) == dist[u][v], where);
            inter.record(johnson_intersection_size(lu, lv, m, k) == (g.neighbors(u) & g.neighbors(v)).count(), where);
            common.record(johnson_common_neighbors(lu, lv, m) == detail::common_labels<SubsetLabel>(g, u, v), where);
        }
        rook.record(verify_rook_isomorphism(g, rook_isomorphism(m, k, lu)), to_string(g.label(u)));
    }
    return {g.family(), {distance, inter, common, rook}};
}

/// The Hamming counterparts: distance, intersection sizes, common neighbours,
/// clique decomposition of N(v), and the clique / non-edge structure of the
/// common neighbourhoods at distance 1 and 2.
inline CrossCheckReport hamming_cross_check(int d, int q, const GraphOptions& opts = {}) {
    const Graph g = make_hamming(d, q, opts);
    const auto dist = detail::all_distances(g);
    CheckTally distance{"distance"}, inter{"intersection_size"}, common{"common_neighbors"},
        cliques{"clique_decomposition"}, near{"distance1_clique"}, far{"distance2_nonadjacent"};
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const auto& lu = std::get<TupleLabel>(g.label(u));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto& lv = std::get<TupleLabel>(g.label(v));
            const auto where = detail::pair_text(g, u, v);
            distance.record(hamming_distance(lu, lv) == dist[u][v], where);
            inter.record(hamming_intersection_size(lu, lv, d, q) == (g.neighbors(u) & g.neighbors(v)).count(), where);
            const auto predicted = hamming_common_neighbors(lu, lv, q);
            common.record(predicted == detail::common_labels<TupleLabel>(g, u, v), where);
            if (dist[u][v] == 1 || dist[u][v] == 2) {
                bool ok = true;
                for (std::size_t i = 0; i < predicted.size(); ++i)
                    for (std::size_t j = i + 1; j < predicted.size(); ++j) {
                        const auto a = g.find_vertex(predicted[i]), b = g.find_vertex(predicted[j]);
                        ok = ok && a && b && g.adjacent(*a, *b) == (dist[u][v] == 1);
                    }
                (dist[u][v] == 1 ? near : far).record(ok, where);
            }
        }
        cliques.record(verify_clique_decomposition(g, lu, neighborhood_clique_decomposition(d, q, lu)),
                       to_string(g.label(u)));
    }
    return {g.family(), {distance, inter, common, cliques, near, far}};
}

}  // namespace vcgraph
