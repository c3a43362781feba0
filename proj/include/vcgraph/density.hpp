#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/io.hpp"
#include "vcgraph/set_system.hpp"

namespace vcgraph {

/// Shatter-function rows for one graph plus the search settings that
/// produced them.
struct PiTable {
    FamilyTag graph;
    NeighborhoodMode neighborhoods = NeighborhoodMode::Open;
    SearchBudget budget;
    std::vector<PiRow> rows;

    bool operator==(const PiTable& o) const {
        return graph == o.graph && neighborhoods == o.neighborhoods && rows == o.rows &&
               budget.exhaustive_cap == o.budget.exhaustive_cap && budget.seed == o.budget.seed &&
               budget.restarts == o.budget.restarts && budget.swap_evaluations == o.budget.swap_evaluations;
    }

    const PiRow* row(std::size_t n) const {
        for (const auto& r : rows)
            if (r.n == n) return &r;
        return nullptr;
    }
};

/// Rows n = 0..n_max (clipped to the vertex count) for the edge relation of g.
inline PiTable pi_table(const Graph& g, std::size_t n_max, const SearchBudget& budget = {},
                        NeighborhoodMode mode = NeighborhoodMode::Open) {
    const auto ss = neighborhood_system(g, mode);
    PiTable t{g.family(), mode, budget, {}};
    for (std::size_t n = 0; n <= std::min(n_max, g.num_vertices()); ++n) t.rows.push_back(shatter_function(ss, n, budget));
    return t;
}

struct ClassPiRow {
    std::size_t n = 0;
    std::uint64_t pi = 0;
    PiMode mode = PiMode::Exact;
    /// Index into ClassPiProfile::tables of the graph attaining the maximum.
    std::size_t graph_index = 0;
};

/// Per-graph tables over an explicit finite list of graphs plus the row-wise
/// maximum. The class row is only the maximum over this list.
struct ClassPiProfile {
    std::vector<PiTable> tables;
    std::vector<ClassPiRow> class_rows;
    /// Graphs that could not be built, with the reason.
    std::vector<std::string> skipped;
};

inline ClassPiProfile pi_profile(const std::vector<FamilyTag>& family, std::size_t n_max,
                                 const SearchBudget& budget = {}, const GraphOptions& opts = {}) {
    ClassPiProfile p;
    for (const auto& tag : family) {
        try {
            p.tables.push_back(pi_table(build_graph(tag, opts), n_max, budget));
        } catch (const CapacityError& e) {
            p.skipped.push_back(tag.name() + ": " + e.what());
        }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::optional<ClassPiRow> best;
        bool any_lower = false;
        for (std::size_t i = 0; i < p.tables.size(); ++i) {
            const auto* r = p.tables[i].row(n);
            if (!r) continue;
            any_lower = any_lower || r->mode == PiMode::LowerBound;
            if (!best || r->pi > best->pi) best = ClassPiRow{n, r->pi, r->mode, i};
        }
        if (!best) break;
        // A maximum that includes any lower-bound row is itself only a lower bound.
        best->mode = any_lower ? PiMode::LowerBound : PiMode::Exact;
        p.class_rows.push_back(*best);
    }
    return p;
}

/// A closed-form upper bound on pi(n) and the graphs it applies to.
struct BoundSpec {
    std::string name;
    std::function<std::uint64_t(std::uint64_t)> formula;
    std::function<bool(const FamilyTag&)> applies;
    std::string source;
    /// Rows with n below this are outside the statement of the bound.
    std::size_t min_n = 0;
};

namespace bounds {

inline BoundSpec sauer_shelah(std::uint64_t d) {
    return {"sauer-shelah(d=" + std::to_string(d) + ")", [d](std::uint64_t n) { return sauer_shelah_bound(d, n); },
            [](const FamilyTag&) { return true; }, "sum_{i<=d} C(n,i)", 0};
}

inline BoundSpec johnson_quadratic() {
    return {"johnson (13n^2+3n)/2", [](std::uint64_t n) { return (13 * n * n + 3 * n) / 2; },
            [](const FamilyTag& t) { return t.family == Family::Johnson; }, "clique counting over maximal cliques", 1};
}

inline BoundSpec hamming_quadratic() {
    return {"hamming 4n^2+n", [](std::uint64_t n) { return 4 * n * n + n; },
            [](const FamilyTag& t) { return t.family == Family::Hamming; }, "recursion pi(n) <= 4n+1+pi(n-1)", 1};
}

inline BoundSpec rook(int rows, int cols) {
    const auto r = static_cast<std::uint64_t>(rows), c = static_cast<std::uint64_t>(cols);
    return {"rook min(n+1," + std::to_string(rows) + ")*min(n+1," + std::to_string(cols) + ")",
            [r, c](std::uint64_t n) { return std::min(n + 1, r) * std::min(n + 1, c); },
            [rows, cols](const FamilyTag& t) {
                return t.family == Family::Rook && t.params.size() == 2 &&
                       ((t.params[0] == rows && t.params[1] == cols) || (t.params[0] == cols && t.params[1] == rows));
            },
            "rows and columns of the rook grid", 0};
}

/// J(m,3) and, by complementation, J(m,m-3).
inline BoundSpec johnson_three_sets() {
    return {"johnson k=3 4n^2", [](std::uint64_t n) { return 4 * n * n; },
            [](const FamilyTag& t) {
                return t.family == Family::Johnson && t.params.size() == 2 &&
                       (t.params[1] == 3 || t.params[0] - t.params[1] == 3);
            },
            "three-element Johnson graphs", 1};
}

/// Every closed-form bound that applies to `tag`, plus Sauer-Shelah when the
/// VC-dimension is known.
inline std::vector<BoundSpec> applicable(const FamilyTag& tag, std::optional<std::uint64_t> vc) {
    std::vector<BoundSpec> out;
    if (vc) out.push_back(sauer_shelah(*vc));
    for (auto b : {johnson_quadratic(), hamming_quadratic(), johnson_three_sets()})
        if (b.applies(tag)) out.push_back(std::move(b));
    if (tag.family == Family::Rook && tag.params.size() == 2) out.push_back(rook(tag.params[0], tag.params[1]));
    return out;
}

}  // namespace bounds

struct BoundRow {
    std::size_t n = 0;
    std::uint64_t pi = 0;
    PiMode mode = PiMode::Exact;
    std::uint64_t bound = 0;
    bool checked = false;  // false below BoundSpec::min_n
    bool ok = true;
};

struct BoundReport {
    std::string bound;
    std::vector<BoundRow> rows;
    /// Some row (exact or lower bound) exceeds the bound.
    bool falsified = false;

    bool passed() const { return !falsified; }
};

inline BoundReport check_bound(const PiTable& table, const BoundSpec& bound) {
    if (!bound.applies(table.graph))
        throw InvalidArgument("bound '" + bound.name + "' does not apply to " + table.graph.name());
    BoundReport report{bound.name, {}, false};
    for (const auto& r : table.rows) {
        BoundRow br{r.n, r.pi, r.mode, bound.formula(r.n), r.n >= bound.min_n, true};
        if (br.checked && r.pi > br.bound) {
            br.ok = false;
            report.falsified = true;
        }
        report.rows.push_back(br);
    }
    return report;
}

using StepBound = std::function<std::uint64_t(std::uint64_t)>;

/// 4n + 1.
inline StepBound hamming_step() {
    return [](std::uint64_t n) { return 4 * n + 1; };
}

/// 4n + min(m, n+1) * min(k, n+1).
inline StepBound johnson_step(int m, int k) {
    const auto mm = static_cast<std::uint64_t>(m), kk = static_cast<std::uint64_t>(k);
    return [mm, kk](std::uint64_t n) { return 4 * n + std::min(mm, n + 1) * std::min(kk, n + 1); };
}

struct RecursionRow {
    std::size_t n = 0;
    std::int64_t delta = 0;  // pi(n) - pi(n-1)
    std::uint64_t step = 0;
    bool ok = true;
};

struct RecursionReport {
    std::vector<RecursionRow> rows;
    std::vector<std::string> notices;

    bool passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const RecursionRow& r) { return r.ok; });
    }
};

/// pi(n) - pi(n-1) <= step(n) for every consecutive pair of exact rows.
inline RecursionReport check_recursion(const PiTable& table, const StepBound& step) {
    RecursionReport report;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& prev = table.rows[i - 1];
        const auto& cur = table.rows[i];
        if (cur.n != prev.n + 1) {
            report.notices.push_back("gap between n=" + std::to_string(prev.n) + " and n=" + std::to_string(cur.n));
            continue;
        }
        if (prev.mode != PiMode::Exact || cur.mode != PiMode::Exact) {
            report.notices.push_back("skipped n=" + std::to_string(cur.n) + ": needs two exact rows");
            continue;
        }
        RecursionRow r{cur.n, static_cast<std::int64_t>(cur.pi) - static_cast<std::int64_t>(prev.pi), step(cur.n), true};
        r.ok = r.delta <= static_cast<std::int64_t>(r.step);
        report.rows.push_back(r);
    }
    return report;
}

/// Least-squares fit of log pi against log n over exact rows with n >= 2.
/// This is a per-instance growth indicator, not the VC-density of a class.
struct SlopeEstimate {
    double slope = 0;
    double intercept = 0;
    /// Root-mean-square residual of the fit in log space.
    double residual = 0;
    std::size_t rows_used = 0;
    /// Consecutive log-log slopes strictly increase: growth looks faster than
    /// any fixed power.
    bool super_polynomial = false;
    std::string flag = "empirical slope on one graph, not the class VC-density";
};

inline SlopeEstimate density_slope_estimate(const PiTable& table) {
    std::vector<double> xs, ys;
    for (const auto& r : table.rows)
        if (r.mode == PiMode::Exact && r.n >= 2 && r.pi > 0) {
            xs.push_back(std::log(static_cast<double>(r.n)));
            ys.push_back(std::log(static_cast<double>(r.pi)));
        }
    if (xs.size() < 3) throw InvalidArgument("density_slope_estimate needs at least 3 exact rows with n >= 2");
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    SlopeEstimate e;
    e.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    e.intercept = (sy - e.slope * sx) / k;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = ys[i] - (e.intercept + e.slope * xs[i]);
        ss += d * d;
    }
    e.residual = std::sqrt(ss / k);
    e.rows_used = xs.size();
    bool increasing = true;
    double last = -INFINITY;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double local = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
        if (!(local > last + 1e-9)) increasing = false;
        last = local;
    }
    e.super_polynomial = increasing;
    return e;
}

enum class TableFormat { Csv, Json };

inline json table_to_json(const PiTable& t) {
    json j;
    j["schema"] = "vcgraph.pi_table/1";
    j["graph"] = family_to_json(t.graph);
    j["neighborhoods"] = t.neighborhoods == NeighborhoodMode::Open ? "open" : "closed";
    j["seed"] = t.budget.seed;
    j["budget"] = json{{"exhaustive_cap", t.budget.exhaustive_cap},
                       {"restarts", t.budget.restarts},
                       {"swap_evaluations", t.budget.swap_evaluations}};
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back(json{{"n", r.n}, {"pi", r.pi}, {"mode", to_string(r.mode)}, {"witness", r.witness}});
    j["rows"] = std::move(rows);
    return j;
}

/// CSV with header "n,pi,mode,witness"; witness vertex ids are space separated.
inline std::string table_to_csv(const PiTable& t) {
    std::ostringstream out;
    out << "n,pi,mode,witness\n";
    for (const auto& r : t.rows) {
        out << r.n << ',' << r.pi << ',' << to_string(r.mode) << ',';
        for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << r.witness[i];
        out << '\n';
    }
    return out.str();
}

inline std::string emit_table(const PiTable& t, TableFormat format) {
    return format == TableFormat::Csv ? table_to_csv(t) : table_to_json(t).dump(2) + "\n";
}

inline PiTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("rows")) throw SchemaError("pi_table: expected {graph, rows}");
    PiTable t;
    t.graph = family_from_json(j["graph"], "pi_table.graph");
    if (j.contains("neighborhoods"))
        t.neighborhoods = j["neighborhoods"] == "closed" ? NeighborhoodMode::Closed : NeighborhoodMode::Open;
    if (j.contains("seed")) t.budget.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("budget")) {
        const auto& b = j["budget"];
        t.budget.exhaustive_cap = b.value("exhaustive_cap", t.budget.exhaustive_cap);
        t.budget.restarts = b.value("restarts", t.budget.restarts);
        t.budget.swap_evaluations = b.value("swap_evaluations", t.budget.swap_evaluations);
    }
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
        const auto& r = j["rows"][i];
        const std::string where = "pi_table.rows[" + std::to_string(i) + "]";
        if (!r.contains("n") || !r.contains("pi") || !r.contains("mode")) throw SchemaError(where + ": expected {n, pi, mode}");
        PiRow row;
        row.n = r["n"].get<std::size_t>();
        row.pi = r["pi"].get<std::uint64_t>();
        const auto mode = r["mode"].get<std::string>();
        if (mode == "exact")
            row.mode = PiMode::Exact;
        else if (mode == "lower_bound")
            row.mode = PiMode::LowerBound;
        else
            throw SchemaError(where + ".mode: unknown mode '" + mode + "'");
        if (r.contains("witness")) row.witness = r["witness"].get<std::vector<VertexId>>();
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace vcgraph
