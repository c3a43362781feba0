#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/io.hpp"
#include "vcgraph/labels.hpp"
#include "vcgraph/set_system.hpp"

namespace vcgraph {

struct SubsetWitness {
    /// Bit i selects base_set[i].
    std::uint32_t subset_mask = 0;
    DomainLabel witness;

    bool operator==(const SubsetWitness&) const = default;
};

/// An explicit shattered set: one witness vertex per subset of the base set.
struct WitnessTable {
    FamilyTag graph_spec;
    std::vector<DomainLabel> base_set;
    std::vector<SubsetWitness> subset_witnesses;
    std::string source;
    /// Free-form note on how listed rows were reconciled with the graph.
    std::string provenance;
    NeighborhoodMode neighborhoods = NeighborhoodMode::Open;

    bool operator==(const WitnessTable&) const = default;
};

namespace detail {

inline SubsetLabel sl(std::initializer_list<int> e) { return SubsetLabel{std::vector<int>(e)}; }
inline TupleLabel tl(std::initializer_list<int> e) { return TupleLabel{std::vector<int>(e)}; }

inline WitnessTable johnson_7_2() {
    WitnessTable w;
    w.graph_spec = {Family::Johnson, {7, 2}};
    w.base_set = {sl({1, 3}), sl({1, 4}), sl({1, 5}), sl({1, 6})};
    const SubsetLabel v1 = sl({1, 3}), v2 = sl({1, 4}), v3 = sl({1, 5}), v4 = sl({1, 6});
    w.subset_witnesses = {
        {0b0000, sl({2, 7})}, {0b0001, sl({3, 7})}, {0b0010, sl({4, 7})}, {0b0100, sl({5, 7})},
        {0b1000, sl({6, 7})}, {0b0011, sl({3, 4})}, {0b0101, sl({3, 5})}, {0b1001, sl({3, 6})},
        {0b0110, sl({4, 5})}, {0b1010, sl({4, 6})}, {0b1100, sl({5, 6})}, {0b0111, v4},
        {0b1011, v3},         {0b1101, v2},         {0b1110, v1},         {0b1111, sl({1, 2})},
    };
    w.source = "reference shattered 4-set table for J(7,2)";
    return w;
}

inline WitnessTable johnson_6_3() {
    WitnessTable w;
    w.graph_spec = {Family::Johnson, {6, 3}};
    const SubsetLabel v1 = sl({2, 3, 4}), v2 = sl({1, 3, 4}), v3 = sl({1, 3, 5}), v4 = sl({1, 2, 5});
    w.base_set = {v1, v2, v3, v4};
    w.subset_witnesses = {
        {0b0000, sl({4, 5, 6})}, {0b0001, sl({2, 3, 6})}, {0b0010, v1},          {0b0100, v4},
        {0b1000, sl({1, 2, 6})}, {0b0011, sl({3, 4, 6})}, {0b0101, v2},          {0b1001, sl({2, 4, 5})},
        {0b0110, sl({1, 3, 6})}, {0b1010, v3},            {0b1100, sl({1, 5, 6})}, {0b0111, sl({3, 4, 5})},
        {0b1011, sl({1, 2, 4})}, {0b1101, sl({2, 3, 5})}, {0b1110, sl({1, 4, 5})}, {0b1111, sl({1, 2, 3})},
    };
    w.source = "reference shattered 4-set table for J(6,3)";
    w.provenance = "rows listed as N({v_i}) are read as N(v_i); every row checked against J(6,3)";
    return w;
}

inline WitnessTable hamming_2_4() {
    WitnessTable w;
    w.graph_spec = {Family::Hamming, {2, 4}};
    w.base_set = {tl({0, 1}), tl({0, 2}), tl({0, 3})};
    w.subset_witnesses = {
        {0b000, tl({1, 0})}, {0b001, tl({1, 1})}, {0b010, tl({2, 2})}, {0b100, tl({3, 3})},
        {0b011, tl({0, 3})}, {0b101, tl({0, 2})}, {0b110, tl({0, 1})}, {0b111, tl({0, 0})},
    };
    w.source = "reference shattered 3-set table for H(2,4)";
    w.provenance = "the three rows listed as {v1,v2} are assigned to the 2-subsets they trace: "
                   "(0,3)->{v1,v2}, (0,2)->{v1,v3}, (0,1)->{v2,v3}";
    return w;
}

inline WitnessTable hamming_3_3() {
    WitnessTable w;
    w.graph_spec = {Family::Hamming, {3, 3}};
    w.base_set = {tl({0, 0, 1}), tl({0, 1, 0}), tl({1, 0, 0})};
    w.subset_witnesses = {
        {0b000, tl({1, 1, 1})}, {0b001, tl({0, 0, 2})}, {0b010, tl({0, 2, 0})}, {0b100, tl({2, 0, 0})},
        {0b011, tl({0, 1, 1})}, {0b101, tl({1, 0, 1})}, {0b110, tl({1, 1, 0})}, {0b111, tl({0, 0, 0})},
    };
    w.source = "reference shattered 3-set table for H(3,3)";
    w.provenance = "the three rows listed as {v1,v2} are assigned to the 2-subsets they trace: "
                   "(0,1,1)->{v1,v2}, (1,1,0)->{v2,v3}; the listed (0,0,1) is v1 itself and traces "
                   "the empty set, so {v1,v3} uses (1,0,1)";
    return w;
}

inline WitnessTable hamming_4_2() {
    WitnessTable w;
    w.graph_spec = {Family::Hamming, {4, 2}};
    w.base_set = {tl({0, 0, 0, 1}), tl({0, 0, 1, 0}), tl({0, 1, 0, 0})};
    w.subset_witnesses = {
        {0b000, tl({1, 1, 1, 1})}, {0b001, tl({1, 0, 0, 1})}, {0b010, tl({1, 0, 1, 0})}, {0b100, tl({1, 1, 0, 0})},
        {0b011, tl({0, 0, 1, 1})}, {0b101, tl({0, 1, 0, 1})}, {0b110, tl({0, 1, 1, 0})}, {0b111, tl({0, 0, 0, 0})},
    };
    w.source = "reference shattered 3-set table for H(4,2)";
    w.provenance = "the three rows listed as {v1,v2} are assigned to the 2-subsets they trace: "
                   "(0,0,1,1)->{v1,v2}, (0,1,0,1)->{v1,v3}, (0,1,1,0)->{v2,v3}";
    return w;
}

}  // namespace detail

/// The five reference shattered-set tables: J(7,2), J(6,3), H(2,4), H(3,3),
/// H(4,2).
inline std::vector<WitnessTable> builtin_witnesses() {
    return {detail::johnson_7_2(), detail::johnson_6_3(), detail::hamming_2_4(), detail::hamming_3_3(),
            detail::hamming_4_2()};
}

struct WitnessRow {
    std::uint32_t subset_mask = 0;
    DomainLabel witness;
    /// Trace actually realised by the witness, or nullopt if the label is not a vertex.
    std::optional<std::uint32_t> realised_mask;
    bool pass = false;
};

struct WitnessReport {
    FamilyTag graph;
    std::vector<WitnessRow> rows;
    bool covers_all_subsets = false;

    bool passed() const {
        if (!covers_all_subsets) return false;
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.pass ? 0 : 1;
        return n;
    }
};

/// Rebuilds the graph and checks each row's N(witness) & A against its mask.
inline WitnessReport verify_witness(const WitnessTable& w, const GraphOptions& opts = {}) {
    const Graph g = build_graph(w.graph_spec, opts);
    const auto ss = neighborhood_system(g, w.neighborhoods);
    WitnessReport report{w.graph_spec, {}, false};
    std::vector<std::optional<VertexId>> base;
    for (const auto& l : w.base_set) base.push_back(g.find_vertex(l));
    std::vector<bool> seen(std::size_t{1} << w.base_set.size(), false);
    for (const auto& row : w.subset_witnesses) {
        WitnessRow r{row.subset_mask, row.witness, std::nullopt, false};
        auto wid = g.find_vertex(row.witness);
        bool base_ok = true;
        for (const auto& b : base) base_ok = base_ok && b.has_value();
        if (wid && base_ok) {
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < base.size(); ++i)
                if (ss.member(*wid).contains(*base[i])) mask |= 1u << i;
            r.realised_mask = mask;
            r.pass = mask == row.subset_mask;
        }
        if (row.subset_mask < seen.size()) seen[row.subset_mask] = true;
        report.rows.push_back(std::move(r));
    }
    report.covers_all_subsets = w.subset_witnesses.size() == seen.size();
    for (bool s : seen) report.covers_all_subsets = report.covers_all_subsets && s;
    return report;
}

inline json export_witness(const WitnessTable& w) {
    json j;
    j["schema"] = "vcgraph.witness/1";
    j["graph"] = family_to_json(w.graph_spec);
    j["neighborhoods"] = w.neighborhoods == NeighborhoodMode::Open ? "open" : "closed";
    json base = json::array();
    for (const auto& l : w.base_set) base.push_back(label_to_json(l));
    j["base_set"] = std::move(base);
    json rows = json::array();
    for (const auto& r : w.subset_witnesses)
        rows.push_back(json{{"subset_mask", r.subset_mask}, {"witness_label", label_to_json(r.witness)}});
    j["witnesses"] = std::move(rows);
    j["source"] = w.source;
    if (!w.provenance.empty()) j["provenance"] = w.provenance;
    return j;
}

/// Parses and validates a witness document. Every subset mask must appear
/// exactly once.
inline WitnessTable import_witness(const json& j) {
    if (!j.is_object()) throw SchemaError("witness: expected a JSON object");
    for (const char* key : {"graph", "base_set", "witnesses"})
        if (!j.contains(key)) throw SchemaError(std::string("witness: missing field '") + key + "'");
    WitnessTable w;
    w.graph_spec = family_from_json(j["graph"], "witness.graph");
    if (j.contains("neighborhoods")) {
        const auto& n = j["neighborhoods"];
        if (n == "open")
            w.neighborhoods = NeighborhoodMode::Open;
        else if (n == "closed")
            w.neighborhoods = NeighborhoodMode::Closed;
        else
            throw SchemaError("witness.neighborhoods: expected \"open\" or \"closed\"");
    }
    if (!j["base_set"].is_array()) throw SchemaError("witness.base_set: expected an array");
    for (std::size_t i = 0; i < j["base_set"].size(); ++i)
        w.base_set.push_back(
            label_from_json(j["base_set"][i], w.graph_spec.family, "witness.base_set[" + std::to_string(i) + "]"));
    if (w.base_set.size() > 30) throw SchemaError("witness.base_set: at most 30 vertices");
    if (!j["witnesses"].is_array()) throw SchemaError("witness.witnesses: expected an array");
    const std::size_t full = std::size_t{1} << w.base_set.size();
    std::vector<bool> seen(full, false);
    for (std::size_t i = 0; i < j["witnesses"].size(); ++i) {
        const auto& row = j["witnesses"][i];
        const std::string where = "witness.witnesses[" + std::to_string(i) + "]";
        if (!row.is_object() || !row.contains("subset_mask") || !row.contains("witness_label"))
            throw SchemaError(where + ": expected {subset_mask, witness_label}");
        if (!row["subset_mask"].is_number_unsigned()) throw SchemaError(where + ".subset_mask: expected an integer");
        const auto mask = row["subset_mask"].get<std::uint64_t>();
        if (mask >= full) throw SchemaError(where + ".subset_mask: " + std::to_string(mask) + " out of range");
        if (seen[mask]) throw SchemaError(where + ": duplicate row for subset_mask " + std::to_string(mask));
        seen[mask] = true;
        w.subset_witnesses.push_back(
            {static_cast<std::uint32_t>(mask),
             label_from_json(row["witness_label"], w.graph_spec.family, where + ".witness_label")});
    }
    for (std::size_t mask = 0; mask < full; ++mask)
        if (!seen[mask]) throw SchemaError("witness: missing row for subset_mask " + std::to_string(mask));
    if (j.contains("source")) w.source = j["source"].get<std::string>();
    if (j.contains("provenance")) w.provenance = j["provenance"].get<std::string>();
    return w;
}

/// Certificate expressed with the graph's labels, ready for export.
inline WitnessTable certificate_to_witness(const ShatterCertificate& cert, const Graph& g, std::string source,
                                           NeighborhoodMode mode = NeighborhoodMode::Open) {
    WitnessTable w;
    w.graph_spec = g.family();
    w.neighborhoods = mode;
    for (auto v : cert.base_set) w.base_set.push_back(g.label_or_index(v));
    for (std::size_t mask = 0; mask < cert.witnesses.size(); ++mask)
        w.subset_witnesses.push_back({static_cast<std::uint32_t>(mask), g.label_or_index(cert.witnesses[mask])});
    w.source = std::move(source);
    return w;
}

}  // namespace vcgraph
