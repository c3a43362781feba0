#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcgraph/combinatorics.hpp"
#include "vcgraph/errors.hpp"
#include "vcgraph/labels.hpp"
#include "vcgraph/vertex_set.hpp"

namespace vcgraph {

enum class Family { Johnson, Hamming, Rook, Complete, SubdividedComplete, Derived };

inline std::string family_name(Family f) {
    switch (f) {
    case Family::Johnson: return "johnson";
    case Family::Hamming: return "hamming";
    case Family::Rook: return "rook";
    case Family::Complete: return "complete";
    case Family::SubdividedComplete: return "subdivided";
    case Family::Derived: return "derived";
    }
    return "derived";
}

inline Family parse_family(const std::string& name) {
    if (name == "johnson") return Family::Johnson;
    if (name == "hamming") return Family::Hamming;
    if (name == "rook") return Family::Rook;
    if (name == "complete") return Family::Complete;
    if (name == "subdivided") return Family::SubdividedComplete;
    if (name == "derived") return Family::Derived;
    throw InvalidArgument("unknown graph family '" + name + "'");
}

/// Family plus its construction parameters: (m,k) for Johnson, (d,q) for
/// Hamming, (rows,cols) for rook, (n) for complete and subdivided complete.
struct FamilyTag {
    Family family = Family::Derived;
    std::vector<int> params;

    bool operator==(const FamilyTag&) const = default;

    std::string name() const {
        std::string s;
        switch (family) {
        case Family::Johnson: s = "J"; break;
        case Family::Hamming: s = "H"; break;
        case Family::Rook: s = "R"; break;
        case Family::Complete: s = "K"; break;
        case Family::SubdividedComplete: s = "S(K"; break;
        case Family::Derived: return "derived";
        }
        s += "(" + detail::join_ints(params) + ")";
        if (family == Family::SubdividedComplete) s += ")";
        return s;
    }
};

struct GraphOptions {
    std::size_t max_vertices = 4096;
};

/// Immutable finite simple graph with bit-vector adjacency rows.
class Graph {
public:
    Graph() = default;

    Graph(FamilyTag tag, std::vector<VertexSet> adjacency, std::vector<DomainLabel> labels = {})
        : tag_(std::move(tag)), adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
        const std::size_t n = adjacency_.size();
        if (!labels_.empty() && labels_.size() != n) throw InvalidArgument("label count does not match vertex count");
        for (VertexId u = 0; u < n; ++u) {
            const auto& row = adjacency_[u];
            if (row.size() != n) throw InvalidArgument("adjacency row has wrong width");
            if (row.contains(u)) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            row.for_each([&](VertexId v) {
                if (!adjacency_[v].contains(u))
                    throw InvalidArgument("asymmetric adjacency between " + std::to_string(u) + " and " +
                                          std::to_string(v));
            });
        }
    }

    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    const FamilyTag& family() const noexcept { return tag_; }

    const VertexSet& neighbors(VertexId v) const {
        check(v);
        return adjacency_[v];
    }
    bool adjacent(VertexId u, VertexId v) const {
        check(u);
        return adjacency_[u].contains(v);
    }
    std::size_t degree(VertexId v) const { return neighbors(v).count(); }

    std::size_t num_edges() const noexcept {
        std::size_t total = 0;
        for (const auto& row : adjacency_) total += row.count();
        return total / 2;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const DomainLabel& label(VertexId v) const {
        check(v);
        if (labels_.empty()) throw InvalidArgument("graph carries no labels");
        return labels_[v];
    }
    std::span<const DomainLabel> labels() const noexcept { return labels_; }

    /// Vertex carrying the given label, if any.
    std::optional<VertexId> find_vertex(const DomainLabel& l) const {
        const auto& p = tag_.params;
        try {
            if (tag_.family == Family::Johnson && std::holds_alternative<SubsetLabel>(l)) {
                const auto& s = std::get<SubsetLabel>(l);
                if (static_cast<int>(s.size()) != p[1]) return std::nullopt;
                return static_cast<VertexId>(rank_subset(s, p[0]));
            }
            if (tag_.family == Family::Hamming && std::holds_alternative<TupleLabel>(l)) {
                const auto& t = std::get<TupleLabel>(l);
                if (static_cast<int>(t.size()) != p[0]) return std::nullopt;
                return static_cast<VertexId>(rank_tuple(t, p[1]));
            }
        } catch (const InvalidArgument&) {
            return std::nullopt;
        }
        for (VertexId v = 0; v < labels_.size(); ++v)
            if (labels_[v] == l) return v;
        if (std::holds_alternative<IndexLabel>(l) && labels_.empty()) {
            auto idx = std::get<IndexLabel>(l).index;
            if (idx < num_vertices()) return static_cast<VertexId>(idx);
        }
        return std::nullopt;
    }

    /// Like find_vertex but throws on an unknown label.
    VertexId vertex_of(const DomainLabel& l) const {
        auto v = find_vertex(l);
        if (!v) throw InvalidArgument("no vertex labelled " + to_string(l) + " in " + tag_.name());
        return *v;
    }

    DomainLabel label_or_index(VertexId v) const {
        if (labels_.empty()) return IndexLabel{v};
        return label(v);
    }

    VertexSet vertex_set(std::span<const VertexId> ids) const {
        VertexSet s(num_vertices());
        for (auto v : ids) {
            check(v);
            s.insert(v);
        }
        return s;
    }

private:
    void check(VertexId v) const {
        if (v >= adjacency_.size())
            throw InvalidArgument("vertex id " + std::to_string(v) + " out of range for " + tag_.name());
    }

    FamilyTag tag_;
    std::vector<VertexSet> adjacency_;
    std::vector<DomainLabel> labels_;
};

namespace detail {

inline std::size_t checked_count(std::uint64_t count, const GraphOptions& opts, const std::string& what) {
    if (count > opts.max_vertices)
        throw CapacityError(what + " needs " + std::to_string(count) + " vertices, capacity is " +
                            std::to_string(opts.max_vertices));
    return static_cast<std::size_t>(count);
}

inline std::vector<VertexSet> empty_rows(std::size_t n) { return std::vector<VertexSet>(n, VertexSet(n)); }

inline void add_edge(std::vector<VertexSet>& rows, VertexId u, VertexId v) {
    rows[u].insert(v);
    rows[v].insert(u);
}

}  // namespace detail

/// J(m,k): k-subsets of {1..m}, vertex i is the subset of colex rank i,
/// adjacent when they share k-1 elements.
inline Graph make_johnson(int m, int k, const GraphOptions& opts = {}) {
    if (m < 0 || k < 0) throw InvalidArgument("Johnson parameters must be nonnegative");
    if (k > m) throw InvalidArgument("Johnson graph needs k <= m");
    const std::string name = "J(" + std::to_string(m) + "," + std::to_string(k) + ")";
    const auto n = detail::checked_count(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)), opts, name);
    auto rows = detail::empty_rows(n);
    std::vector<DomainLabel> labels;
    labels.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) labels.emplace_back(unrank_subset(r, m, k));
    for (VertexId u = 0; u < n; ++u) {
        const auto& s = std::get<SubsetLabel>(labels[u]).elements;
        std::vector<bool> in(static_cast<std::size_t>(m) + 1, false);
        for (int e : s) in[static_cast<std::size_t>(e)] = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (int x = 1; x <= m; ++x) {
                if (in[static_cast<std::size_t>(x)]) continue;
                std::vector<int> t = s;
                t[i] = x;
                std::sort(t.begin(), t.end());
                auto w = static_cast<VertexId>(rank_subset_elements(t, m));
                if (w > u) detail::add_edge(rows, u, w);
            }
        }
    }
    return Graph({Family::Johnson, {m, k}}, std::move(rows), std::move(labels));
}

/// H(d,q): d-tuples over {0..q-1}, vertex i is the little-endian base-q
/// expansion of i, adjacent at Hamming distance 1.
inline Graph make_hamming(int d, int q, const GraphOptions& opts = {}) {
    if (d < 0 || q < 1) throw InvalidArgument("Hamming graph needs d >= 0 and q >= 1");
    const std::string name = "H(" + std::to_string(d) + "," + std::to_string(q) + ")";
    const auto n = detail::checked_count(int_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(d)), opts, name);
    auto rows = detail::empty_rows(n);
    std::vector<DomainLabel> labels;
    labels.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) labels.emplace_back(unrank_tuple(r, d, q));
    std::uint64_t stride = 1;
    for (int c = 0; c < d; ++c, stride *= static_cast<std::uint64_t>(q)) {
        for (VertexId u = 0; u < n; ++u) {
            const int digit = std::get<TupleLabel>(labels[u]).entries[static_cast<std::size_t>(c)];
            for (int y = digit + 1; y < q; ++y)
                detail::add_edge(rows, u, static_cast<VertexId>(u + static_cast<std::uint64_t>(y - digit) * stride));
        }
    }
    return Graph({Family::Hamming, {d, q}}, std::move(rows), std::move(labels));
}

/// R(m,n): m x n grid, vertex row*n + col, adjacent when sharing a row or a
/// column.
inline Graph make_rook(int m, int n, const GraphOptions& opts = {}) {
    if (m < 1 || n < 1) throw InvalidArgument("rook's graph needs at least one row and one column");
    const std::string name = "R(" + std::to_string(m) + "," + std::to_string(n) + ")";
    const auto count = detail::checked_count(static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n), opts, name);
    auto rows = detail::empty_rows(count);
    std::vector<DomainLabel> labels;
    labels.reserve(count);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) labels.emplace_back(PairLabel{r, c});
    auto id = [n](int r, int c) { return static_cast<VertexId>(r * n + c); };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            for (int c2 = c + 1; c2 < n; ++c2) detail::add_edge(rows, id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < m; ++r2) detail::add_edge(rows, id(r, c), id(r2, c));
        }
    return Graph({Family::Rook, {m, n}}, std::move(rows), std::move(labels));
}

inline Graph make_complete(int n, const GraphOptions& opts = {}) {
    if (n < 0) throw InvalidArgument("complete graph needs n >= 0");
    const auto count = detail::checked_count(static_cast<std::uint64_t>(n), opts, "K(" + std::to_string(n) + ")");
    auto rows = detail::empty_rows(count);
    for (VertexId u = 0; u < count; ++u)
        for (VertexId v = u + 1; v < count; ++v) detail::add_edge(rows, u, v);
    return Graph({Family::Complete, {n}}, std::move(rows));
}

/// 1-subdivision of K_n. Vertex i < n is the original vertex labelled {i+1};
/// vertex n + r is the subdivision point of the edge whose endpoint pair
/// {i+1, j+1} has colex rank r.
inline Graph make_subdivided_complete(int n, const GraphOptions& opts = {}) {
    if (n < 0) throw InvalidArgument("subdivided complete graph needs n >= 0");
    const auto pairs = binomial(static_cast<std::uint64_t>(n), 2);
    const auto count = detail::checked_count(static_cast<std::uint64_t>(n) + pairs, opts,
                                             "S(K(" + std::to_string(n) + "))");
    auto rows = detail::empty_rows(count);
    std::vector<DomainLabel> labels;
    labels.reserve(count);
    for (int i = 1; i <= n; ++i) labels.emplace_back(SubsetLabel{{i}});
    for (std::uint64_t r = 0; r < pairs; ++r) {
        auto p = unrank_subset(r, n, 2);
        auto s = static_cast<VertexId>(static_cast<std::uint64_t>(n) + r);
        detail::add_edge(rows, s, static_cast<VertexId>(p.elements[0] - 1));
        detail::add_edge(rows, s, static_cast<VertexId>(p.elements[1] - 1));
        labels.emplace_back(std::move(p));
    }
    return Graph({Family::SubdividedComplete, {n}}, std::move(rows), std::move(labels));
}

/// Builds a graph from its family tag.
inline Graph build_graph(const FamilyTag& tag, const GraphOptions& opts = {}) {
    auto need = [&](std::size_t k) {
        if (tag.params.size() != k)
            throw InvalidArgument(family_name(tag.family) + " takes " + std::to_string(k) + " parameter(s)");
    };
    switch (tag.family) {
    case Family::Johnson: need(2); return make_johnson(tag.params[0], tag.params[1], opts);
    case Family::Hamming: need(2); return make_hamming(tag.params[0], tag.params[1], opts);
    case Family::Rook: need(2); return make_rook(tag.params[0], tag.params[1], opts);
    case Family::Complete: need(1); return make_complete(tag.params[0], opts);
    case Family::SubdividedComplete: need(1); return make_subdivided_complete(tag.params[0], opts);
    case Family::Derived: break;
    }
    throw InvalidArgument("derived graphs cannot be rebuilt from a family tag");
}

/// G[s], relabelled to 0..|s|-1 in increasing id order; labels are kept.
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::int64_t> pos(g.num_vertices(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= g.num_vertices())
            throw InvalidArgument("vertex id " + std::to_string(ids[i]) + " out of range for induced subgraph");
        pos[ids[i]] = static_cast<std::int64_t>(i);
    }
    auto rows = detail::empty_rows(ids.size());
    std::vector<DomainLabel> labels;
    if (g.has_labels()) labels.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        g.neighbors(ids[i]).for_each([&](VertexId w) {
            if (pos[w] >= 0) rows[i].insert(static_cast<VertexId>(pos[w]));
        });
        if (g.has_labels()) labels.push_back(g.label(ids[i]));
    }
    return Graph({Family::Derived, {}}, std::move(rows), std::move(labels));
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.size() != g.num_vertices()) throw InvalidArgument("vertex set width does not match graph");
    auto ids = s.to_vector();
    return induced_subgraph(g, std::span<const VertexId>(ids));
}

inline Graph delete_vertex(const Graph& g, VertexId v) {
    if (v >= g.num_vertices()) throw InvalidArgument("cannot delete vertex " + std::to_string(v) + ": out of range");
    auto keep = VertexSet::full(g.num_vertices());
    keep.erase(v);
    return induced_subgraph(g, keep);
}

/// Graph-metric distance, or nullopt when u and v are disconnected.
inline std::optional<std::size_t> bfs_distance(const Graph& g, VertexId u, VertexId v) {
    if (u >= g.num_vertices() || v >= g.num_vertices()) throw InvalidArgument("bfs_distance: vertex out of range");
    if (u == v) return 0;
    std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
    std::deque<VertexId> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        std::optional<std::size_t> found;
        g.neighbors(x).for_each([&](VertexId y) {
            if (dist[y] != SIZE_MAX) return;
            dist[y] = dist[x] + 1;
            if (y == v) found = dist[y];
            queue.push_back(y);
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// All distances from u; SIZE_MAX marks unreachable vertices.
inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId u) {
    std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
    std::deque<VertexId> queue{u};
    dist.at(u) = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        g.neighbors(x).for_each([&](VertexId y) {
            if (dist[y] != SIZE_MAX) return;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        });
    }
    return dist;
}

/// True when `map` (old id -> new id) is a bijection that preserves adjacency
/// and non-adjacency from g onto h.
inline bool is_isomorphism(const Graph& g, const Graph& h, std::span<const VertexId> map) {
    if (g.num_vertices() != h.num_vertices() || map.size() != g.num_vertices()) return false;
    std::vector<bool> hit(h.num_vertices(), false);
    for (auto t : map) {
        if (t >= h.num_vertices() || hit[t]) return false;
        hit[t] = true;
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v = u + 1; v < g.num_vertices(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    return true;
}

}  // namespace vcgraph
