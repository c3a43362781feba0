#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/labels.hpp"
#include "vcgraph/set_system.hpp"

namespace vcgraph {

using json = nlohmann::ordered_json;

inline json label_to_json(const DomainLabel& label) {
    struct Visitor {
        json operator()(const IndexLabel& l) const { return l.index; }
        json operator()(const SubsetLabel& l) const { return l.elements; }
        json operator()(const TupleLabel& l) const { return l.entries; }
        json operator()(const PairLabel& l) const { return json::array({l.row, l.col}); }
    };
    return std::visit(Visitor{}, label);
}

/// Reads a label in the shape used by `family`; `where` locates errors.
inline DomainLabel label_from_json(const json& j, Family family, const std::string& where) {
    auto ints = [&]() {
        if (!j.is_array()) throw SchemaError(where + ": expected an array label");
        std::vector<int> out;
        for (const auto& e : j) {
            if (!e.is_number_integer()) throw SchemaError(where + ": label entries must be integers");
            out.push_back(e.get<int>());
        }
        return out;
    };
    switch (family) {
    case Family::Johnson:
    case Family::SubdividedComplete: return SubsetLabel{ints()};
    case Family::Hamming: return TupleLabel{ints()};
    case Family::Rook: {
        auto v = ints();
        if (v.size() != 2) throw SchemaError(where + ": rook labels are [row, col]");
        return PairLabel{v[0], v[1]};
    }
    case Family::Complete:
    case Family::Derived:
        if (!j.is_number_unsigned()) throw SchemaError(where + ": expected a vertex index");
        return IndexLabel{j.get<std::size_t>()};
    }
    throw SchemaError(where + ": unknown family");
}

inline json family_to_json(const FamilyTag& tag) {
    return json{{"family", family_name(tag.family)}, {"params", tag.params}};
}

inline FamilyTag family_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("family") || !j.contains("params"))
        throw SchemaError(where + ": expected {family, params}");
    if (!j["family"].is_string()) throw SchemaError(where + ".family: expected a string");
    FamilyTag tag;
    try {
        tag.family = parse_family(j["family"].get<std::string>());
    } catch (const InvalidArgument& e) {
        throw SchemaError(where + ".family: " + e.what());
    }
    if (!j["params"].is_array()) throw SchemaError(where + ".params: expected an array");
    for (const auto& p : j["params"]) {
        if (!p.is_number_integer()) throw SchemaError(where + ".params: expected integers");
        tag.params.push_back(p.get<int>());
    }
    return tag;
}

/// One line per vertex: "u: v1 v2 ...".
inline std::string graph_to_adjacency_text(const Graph& g) {
    std::ostringstream out;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        out << u << ':';
        g.neighbors(u).for_each([&](VertexId v) { out << ' ' << v; });
        out << '\n';
    }
    return out.str();
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["schema"] = "vcgraph.graph/1";
    j["graph"] = family_to_json(g.family());
    j["num_vertices"] = g.num_vertices();
    j["num_edges"] = g.num_edges();
    json labels = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) labels.push_back(label_to_json(g.label_or_index(v)));
    j["labels"] = std::move(labels);
    json adj = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) adj.push_back(g.neighbors(v).to_vector());
    j["adjacency"] = std::move(adj);
    return j;
}

}  // namespace vcgraph
