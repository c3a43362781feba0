#pragma once

#include <cstddef>
#include <vector>

#include "vcgraph/graph.hpp"
#include "vcgraph/labels.hpp"

namespace vcgraph {

/// A witness w for the pair {base[i], base[j]}: N(w) meets the base set in
/// exactly those two vertices.
struct PairWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    DomainLabel witness;
    bool verified = false;
};

/// Base set plus pair witnesses realising C(|A|,2) distinct traces.
struct DensityConstruction {
    FamilyTag graph;
    std::vector<DomainLabel> base_set;
    std::vector<PairWitness> pairs;

    bool all_verified() const {
        for (const auto& p : pairs)
            if (!p.verified) return false;
        return true;
    }
};

/// Marks each pair witness by checking N(w) & A = {base[i], base[j]} in g.
inline void verify_pairs(DensityConstruction& c, const Graph& g) {
    std::vector<VertexId> ids;
    ids.reserve(c.base_set.size());
    for (const auto& l : c.base_set) ids.push_back(g.vertex_of(l));
    for (auto& p : c.pairs) {
        auto w = g.find_vertex(p.witness);
        p.verified = false;
        if (!w) continue;
        bool ok = true;
        for (std::size_t t = 0; t < ids.size() && ok; ++t)
            ok = g.adjacent(*w, ids[t]) == (t == p.i || t == p.j);
        p.verified = ok;
    }
}

}  // namespace vcgraph
