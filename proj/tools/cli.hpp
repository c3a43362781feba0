#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcgraph/vcgraph.hpp"

namespace vcgraph::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2 };

class UsageFailure : public Error {
public:
    using Error::Error;
};

/// Splits on `sep` outside of (), {} and [].
inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw UsageFailure("unbalanced brackets in '" + s + "'");
    out.push_back(cur);
    return out;
}

/// Labels on the command line: "1.2.4" or "{1,2,4}" for subsets, "0.1.2" or
/// "(0,1,2)" for tuples, "r.c" for rook cells and a plain index otherwise.
inline DomainLabel parse_label(const std::string& text, Family family) {
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '(' && c != ')' && c != '[' &&
            c != ']')
            body += c == ',' ? '.' : c;
    std::vector<int> ints;
    for (const auto& part : split_top_level(body, '.')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw UsageFailure("bad label '" + text + "'");
        ints.push_back(std::stoi(part));
    }
    switch (family) {
    case Family::Johnson:
    case Family::SubdividedComplete: std::sort(ints.begin(), ints.end()); return SubsetLabel{ints};
    case Family::Hamming: return TupleLabel{ints};
    case Family::Rook:
        if (ints.size() != 2) throw UsageFailure("rook labels are row.col, got '" + text + "'");
        return PairLabel{ints[0], ints[1]};
    default:
        if (ints.size() != 1) throw UsageFailure("expected a vertex index, got '" + text + "'");
        return IndexLabel{static_cast<std::size_t>(ints[0])};
    }
}

inline VertexId resolve(const Graph& g, const std::string& text) {
    const auto label = parse_label(text, g.family().family);
    auto id = g.find_vertex(label);
    if (!id) throw UsageFailure("'" + text + "' is not a vertex of " + g.family().name());
    return *id;
}

inline json vc_to_json(const VcValue& v) {
    if (is_negative_infinity(v)) return "-inf";
    return std::get<std::size_t>(v);
}

inline std::string mode_name(NeighborhoodMode m) { return m == NeighborhoodMode::Open ? "open" : "closed"; }

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageFailure("cannot write '" + path + "'");
    f << content;
}

inline json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageFailure("cannot read '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

struct Options {
    std::string family;
    std::vector<int> params;
    bool json_out = false;
    std::string out;
    bool closed = false;
    unsigned threads = 0;
    std::size_t max_vertices = GraphOptions{}.max_vertices;

    // vcdim / shatter / classify
    std::string set;
    std::string quad;

    // verify
    bool builtin = false;
    std::string file;

    // density
    std::size_t nmax = 5;
    bool exact = false;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> restarts;

    FamilyTag tag() const {
        if (family.empty()) throw UsageFailure("--family is required");
        FamilyTag t;
        try {
            t.family = parse_family(family);
        } catch (const InvalidArgument& e) {
            throw UsageFailure(e.what());
        }
        if (t.family == Family::Derived) throw UsageFailure("derived graphs cannot be generated");
        t.params = params;
        return t;
    }
    NeighborhoodMode mode() const { return closed ? NeighborhoodMode::Closed : NeighborhoodMode::Open; }
    GraphOptions graph_options() const { return {max_vertices}; }
    Graph graph() const { return build_graph(tag(), graph_options()); }
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    int gen() {
        const Graph g = o_.graph();
        const std::string text = o_.json_out ? graph_to_json(g).dump(2) + "\n" : graph_to_adjacency_text(g);
        if (o_.out.empty()) {
            out_ << text;
        } else {
            write_file(o_.out, text);
            if (!o_.json_out) out_ << "wrote " << o_.out << "\n";
        }
        return Ok;
    }

    int vcdim() {
        const Graph g = o_.graph();
        const auto ss = neighborhood_system(g, o_.mode());
        const auto r = vc_dimension_pruned(ss, o_.threads);
        std::optional<WitnessTable> cert;
        if (r.certificate) cert = certificate_to_witness(*r.certificate, g, "vc_dimension search", o_.mode());
        if (cert && !o_.out.empty()) write_file(o_.out, export_witness(*cert).dump(2) + "\n");
        if (o_.json_out) {
            json j;
            j["schema"] = "vcgraph.vcdim/1";
            j["graph"] = family_to_json(g.family());
            j["neighborhoods"] = mode_name(o_.mode());
            j["vc_dimension"] = vc_to_json(r.dimension);
            j["certificate"] = cert ? export_witness(*cert) : json(nullptr);
            if (!o_.out.empty()) j["certificate_path"] = o_.out;
            out_ << j.dump(2) << "\n";
            return Ok;
        }
        out_ << g.family().name() << " (" << mode_name(o_.mode()) << " neighbourhoods): VC-dimension "
             << to_string(r.dimension) << "\n";
        if (cert) {
            out_ << "shattered set:";
            for (const auto& l : cert->base_set) out_ << ' ' << to_string(l);
            out_ << "\n";
            if (!o_.out.empty()) out_ << "certificate: " << o_.out << "\n";
        }
        return Ok;
    }

    int shatter() {
        const Graph g = o_.graph();
        const auto ss = neighborhood_system(g, o_.mode());
        if (o_.set.empty()) throw UsageFailure("shatter needs --set");
        std::vector<VertexId> a;
        for (const auto& part : split_top_level(o_.set, ',')) a.push_back(resolve(g, part));
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw UsageFailure("--set repeats a vertex");
        if (a.size() > 30) throw UsageFailure("--set holds at most 30 vertices");
        const auto cert = is_shattered(ss, a);
        const auto tr = trace(ss, VertexSet::from_range(g.num_vertices(), a));
        std::vector<bool> present(std::size_t{1} << a.size(), false);
        for (const auto& t : tr) {
            std::size_t mask = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (t.contains(a[i])) mask |= std::size_t{1} << i;
            present[mask] = true;
        }
        std::vector<std::size_t> missing;
        for (std::size_t m = 0; m < present.size(); ++m)
            if (!present[m]) missing.push_back(m);
        std::optional<WitnessTable> w;
        if (cert) w = certificate_to_witness(*cert, g, "is_shattered", o_.mode());
        if (w && !o_.out.empty()) write_file(o_.out, export_witness(*w).dump(2) + "\n");
        if (o_.json_out) {
            json j;
            j["schema"] = "vcgraph.shatter/1";
            j["graph"] = family_to_json(g.family());
            j["neighborhoods"] = mode_name(o_.mode());
            json set = json::array();
            for (auto v : a) set.push_back(label_to_json(g.label_or_index(v)));
            j["set"] = std::move(set);
            j["trace_size"] = tr.size();
            j["shattered"] = cert.has_value();
            j["missing_masks"] = missing;
            j["certificate"] = w ? export_witness(*w) : json(nullptr);
            out_ << j.dump(2) << "\n";
            return Ok;
        }
        out_ << "set:";
        for (auto v : a) out_ << ' ' << to_string(g.label_or_index(v));
        out_ << "\ntrace size " << tr.size() << " of " << present.size() << "\n";
        out_ << (cert ? "shattered" : "not shattered") << "\n";
        if (!missing.empty()) {
            out_ << "missing subset masks:";
            for (auto m : missing) out_ << ' ' << m;
            out_ << "\n";
        }
        return Ok;
    }

    int classify() {
        const auto tag = o_.tag();
        if (tag.family != Family::Johnson) throw UsageFailure("classify works on Johnson graphs");
        if (o_.quad.empty()) throw UsageFailure("classify needs --quad v:v1,v2,v3,v4");
        const auto halves = split_top_level(o_.quad, ':');
        if (halves.size() != 2) throw UsageFailure("--quad expects v:v1,v2,v3,v4");
        const Graph g = o_.graph();
        const VertexId center = resolve(g, halves[0]);
        const auto parts = split_top_level(halves[1], ',');
        if (parts.size() != 4) throw UsageFailure("--quad needs exactly four neighbours");
        std::array<SubsetLabel, 4> quad;
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < 4; ++i) {
            ids.push_back(resolve(g, parts[i]));
            quad[i] = std::get<SubsetLabel>(g.label(ids.back()));
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw UsageFailure("--quad repeats a vertex");
        const auto& v = std::get<SubsetLabel>(g.label(center));
        const CaseId id = classify_four_subset(v, quad);
        const bool shattered = is_shattered(neighborhood_system(g), ids).has_value();
        const bool agree = shattered == id.shatters();
        if (o_.json_out) {
            json j;
            j["schema"] = "vcgraph.classify/1";
            j["graph"] = family_to_json(g.family());
            j["center"] = label_to_json(v);
            json q = json::array();
            for (const auto& l : quad) q.push_back(label_to_json(l));
            j["quad"] = std::move(q);
            j["case"] = roman(id.value);
            j["case_number"] = id.value;
            j["a_partition"] = id.a_partition;
            j["x_partition"] = id.x_partition;
            json al = json::array();
            for (const auto& [a, x] : id.alignment) al.push_back(json::array({a, x}));
            j["alignment"] = std::move(al);
            j["predicted_shattered"] = id.shatters();
            j["shattered"] = shattered;
            j["agrees"] = agree;
            out_ << j.dump(2) << "\n";
        } else {
            out_ << "Case " << roman(id.value) << "\n";
            out_ << "a-partition: " << detail::join_ints(id.a_partition) << "\n";
            out_ << "x-partition: " << detail::join_ints(id.x_partition) << "\n";
            out_ << "alignment:";
            for (const auto& [a, x] : id.alignment) out_ << " (" << a << ',' << x << ')';
            out_ << "\npredicted " << (id.shatters() ? "shattered" : "not shattered") << ", brute force "
                 << (shattered ? "shattered" : "not shattered") << "\n";
        }
        return agree ? Ok : VerificationFailed;
    }

    int verify() {
        if (o_.builtin == !o_.file.empty()) throw UsageFailure("verify needs exactly one of --builtin or --file");
        std::vector<WitnessTable> witnesses;
        if (o_.builtin) {
            witnesses = builtin_witnesses();
        } else {
            witnesses.push_back(import_witness(read_json_file(o_.file)));
        }
        if (o_.builtin && !o_.out.empty()) {
            std::filesystem::create_directories(o_.out);
            for (const auto& w : witnesses) {
                auto name = w.graph_spec.name();
                std::replace_if(name.begin(), name.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); }, '_');
                write_file((std::filesystem::path(o_.out) / (name + ".json")).string(), export_witness(w).dump(2) + "\n");
            }
        }
        bool all = true;
        std::size_t ok = 0;
        json results = json::array();
        for (const auto& w : witnesses) {
            const auto r = verify_witness(w, o_.graph_options());
            all = all && r.passed();
            ok += r.passed() ? 1 : 0;
            if (o_.json_out) {
                json failed = json::array();
                for (const auto& row : r.rows)
                    if (!row.pass)
                        failed.push_back(json{{"subset_mask", row.subset_mask},
                                              {"witness_label", label_to_json(row.witness)},
                                              {"realised_mask", row.realised_mask ? json(*row.realised_mask) : json(nullptr)}});
                results.push_back(json{{"graph", family_to_json(w.graph_spec)},
                                       {"source", w.source},
                                       {"rows", r.rows.size()},
                                       {"failures", r.failures()},
                                       {"covers_all_subsets", r.covers_all_subsets},
                                       {"passed", r.passed()},
                                       {"failed_rows", std::move(failed)}});
            } else {
                out_ << w.graph_spec.name() << ": " << (r.rows.size() - r.failures()) << "/" << r.rows.size()
                     << " rows pass" << (r.covers_all_subsets ? "" : ", subsets not all covered")
                     << (r.passed() ? "" : "  FAILED") << "\n";
                for (const auto& row : r.rows)
                    if (!row.pass)
                        out_ << "  mask " << row.subset_mask << " witness " << to_string(row.witness) << " realises "
                             << (row.realised_mask ? std::to_string(*row.realised_mask) : "nothing (not a vertex)") << "\n";
            }
        }
        if (o_.json_out) {
            json j;
            j["schema"] = "vcgraph.verify/1";
            j["results"] = std::move(results);
            j["passed"] = all;
            out_ << j.dump(2) << "\n";
        } else {
            out_ << ok << "/" << witnesses.size() << " witnesses pass\n";
        }
        return all ? Ok : VerificationFailed;
    }

    int density() {
        if (o_.exact && (o_.budget || o_.seed || o_.restarts))
            throw UsageFailure("--exact conflicts with --budget/--seed/--restarts");
        SearchBudget budget;
        budget.threads = o_.threads;
        if (o_.exact) budget.exhaustive_cap = std::numeric_limits<std::uint64_t>::max();
        if (o_.budget) budget.exhaustive_cap = *o_.budget;
        if (o_.seed) budget.seed = *o_.seed;
        if (o_.restarts) budget.restarts = *o_.restarts;
        const Graph g = o_.graph();
        const auto table = pi_table(g, o_.nmax, budget, o_.mode());
        const auto vc = vc_dimension_pruned(neighborhood_system(g, o_.mode()), o_.threads);
        std::optional<std::uint64_t> d;
        if (!is_negative_infinity(vc.dimension)) d = std::get<std::size_t>(vc.dimension);
        std::vector<BoundSpec> specs;
        if (o_.mode() == NeighborhoodMode::Open)
            specs = bounds::applicable(g.family(), d);
        else if (d)
            specs.push_back(bounds::sauer_shelah(*d));
        std::vector<BoundReport> reports;
        for (const auto& b : specs) reports.push_back(check_bound(table, b));
        std::optional<RecursionReport> rec;
        std::string step_name;
        const auto& p = g.family().params;
        if (o_.mode() == NeighborhoodMode::Open && g.family().family == Family::Hamming) {
            rec = check_recursion(table, hamming_step());
            step_name = "4n+1";
        } else if (o_.mode() == NeighborhoodMode::Open && g.family().family == Family::Johnson) {
            rec = check_recursion(table, johnson_step(p[0], p[1]));
            step_name = "4n+min(m,n+1)*min(k,n+1)";
        }
        std::optional<SlopeEstimate> slope;
        try {
            slope = density_slope_estimate(table);
        } catch (const InvalidArgument&) {
        }
        bool passed = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.passed(); });
        if (rec) passed = passed && rec->passed();

        if (!o_.out.empty()) {
            const bool csv = std::filesystem::path(o_.out).extension() == ".csv";
            write_file(o_.out, emit_table(table, csv ? TableFormat::Csv : TableFormat::Json));
        }
        if (o_.json_out) {
            json j;
            j["schema"] = "vcgraph.density/1";
            j["graph"] = family_to_json(g.family());
            j["vc_dimension"] = vc_to_json(vc.dimension);
            j["table"] = table_to_json(table);
            json bj = json::array();
            for (std::size_t i = 0; i < reports.size(); ++i) {
                json rows = json::array();
                for (const auto& r : reports[i].rows)
                    rows.push_back(json{{"n", r.n}, {"pi", r.pi}, {"mode", to_string(r.mode)}, {"bound", r.bound},
                                        {"checked", r.checked}, {"ok", r.ok}});
                bj.push_back(json{{"name", specs[i].name}, {"source", specs[i].source}, {"min_n", specs[i].min_n},
                                  {"passed", reports[i].passed()}, {"rows", std::move(rows)}});
            }
            j["bounds"] = std::move(bj);
            if (rec) {
                json rows = json::array();
                for (const auto& r : rec->rows)
                    rows.push_back(json{{"n", r.n}, {"delta", r.delta}, {"step", r.step}, {"ok", r.ok}});
                j["recursion"] = json{{"step", step_name}, {"passed", rec->passed()}, {"rows", std::move(rows)},
                                      {"notices", rec->notices}};
            } else {
                j["recursion"] = nullptr;
            }
            if (slope)
                j["slope"] = json{{"slope", slope->slope},         {"intercept", slope->intercept},
                                  {"residual", slope->residual},   {"rows_used", slope->rows_used},
                                  {"super_polynomial", slope->super_polynomial}, {"flag", slope->flag}};
            else
                j["slope"] = nullptr;
            j["passed"] = passed;
            out_ << j.dump(2) << "\n";
        } else {
            out_ << g.family().name() << " (" << mode_name(o_.mode()) << " neighbourhoods), seed " << budget.seed
                 << ", VC-dimension " << to_string(vc.dimension) << "\n";
            out_ << emit_table(table, TableFormat::Csv);
            for (std::size_t i = 0; i < reports.size(); ++i) {
                out_ << "bound " << specs[i].name << ": " << (reports[i].passed() ? "ok" : "VIOLATED");
                for (const auto& r : reports[i].rows)
                    if (!r.ok) out_ << " [n=" << r.n << " pi=" << r.pi << " > " << r.bound << "]";
                out_ << "\n";
            }
            if (rec) {
                out_ << "recursion step " << step_name << ": " << (rec->passed() ? "ok" : "VIOLATED") << "\n";
                for (const auto& n : rec->notices) out_ << "  note: " << n << "\n";
            }
            if (slope)
                out_ << "log-log slope " << slope->slope << " (residual " << slope->residual << ", "
                     << (slope->super_polynomial ? "looks super-polynomial, " : "") << slope->flag << ")\n";
        }
        return passed ? Ok : VerificationFailed;
    }

    int oracle_check() {
        const auto tag = o_.tag();
        if (tag.params.size() != 2) throw UsageFailure("oracle-check needs two --params");
        CrossCheckReport report;
        if (tag.family == Family::Johnson)
            report = johnson_cross_check(tag.params[0], tag.params[1], o_.graph_options());
        else if (tag.family == Family::Hamming)
            report = hamming_cross_check(tag.params[0], tag.params[1], o_.graph_options());
        else
            throw UsageFailure("oracle-check works on johnson and hamming graphs");
        if (o_.json_out) {
            json checks = json::array();
            for (const auto& c : report.checks)
                checks.push_back(json{{"name", c.name},
                                      {"comparisons", c.comparisons},
                                      {"mismatches", c.mismatches},
                                      {"first_mismatch", c.first_mismatch}});
            json j;
            j["schema"] = "vcgraph.oracle_check/1";
            j["graph"] = family_to_json(report.graph);
            j["checks"] = std::move(checks);
            j["passed"] = report.passed();
            out_ << j.dump(2) << "\n";
        } else {
            for (const auto& c : report.checks) {
                out_ << c.name << ": " << c.comparisons << " comparisons, " << c.mismatches << " mismatches";
                if (c.mismatches) out_ << " (first: " << c.first_mismatch << ")";
                out_ << "\n";
            }
            out_ << (report.passed() ? "all checks pass" : "MISMATCH") << "\n";
        }
        return report.passed() ? Ok : VerificationFailed;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Shattering and VC-dimension experiments on Johnson, Hamming and rook graphs", "vcgraph"};
    app.require_subcommand(1, 1);

    auto graph_flags = [&](CLI::App* c, bool required) {
        auto* f = c->add_option("--family", o.family, "johnson, hamming, rook, complete or subdivided");
        auto* p = c->add_option("--params", o.params, "comma separated parameters, e.g. 7,2")->delimiter(',');
        if (required) {
            f->required();
            p->required();
        }
        c->add_option("--max-vertices", o.max_vertices, "vertex capacity limit");
    };
    auto common = [&](CLI::App* c) {
        c->add_flag("--json", o.json_out, "machine readable output");
        c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    };

    auto* gen = app.add_subcommand("gen", "print a graph as adjacency text or JSON");
    graph_flags(gen, true);
    common(gen);
    gen->add_option("--out", o.out, "write to this file");

    auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of the neighbourhood set system");
    graph_flags(vcdim, true);
    common(vcdim);
    vcdim->add_flag("--closed", o.closed, "use closed neighbourhoods");
    vcdim->add_option("--out", o.out, "write the certificate here");

    auto* shatter = app.add_subcommand("shatter", "test whether a vertex set is shattered");
    graph_flags(shatter, true);
    common(shatter);
    shatter->add_flag("--closed", o.closed, "use closed neighbourhoods");
    shatter->add_option("--set", o.set, "vertices, e.g. 1.2,1.3,2.3")->required();
    shatter->add_option("--out", o.out, "write the certificate here");

    auto* classify = app.add_subcommand("classify", "case of four neighbours of a Johnson vertex");
    graph_flags(classify, true);
    common(classify);
    classify->add_option("--quad", o.quad, "v:v1,v2,v3,v4 with labels like 1.2.3 or {1,2,3}")->required();

    auto* verify = app.add_subcommand("verify", "check shattered-set witness tables");
    common(verify);
    verify->add_flag("--builtin", o.builtin, "the built-in tables");
    verify->add_option("--file", o.file, "a witness JSON file");
    verify->add_option("--out", o.out, "with --builtin, export the tables into this directory");
    verify->add_option("--max-vertices", o.max_vertices, "vertex capacity limit");

    auto* density = app.add_subcommand("density", "shatter function table and bound checks");
    graph_flags(density, true);
    common(density);
    density->add_flag("--closed", o.closed, "use closed neighbourhoods");
    density->add_option("--nmax", o.nmax, "largest n")->capture_default_str();
    density->add_flag("--exact", o.exact, "always scan exhaustively");
    density->add_option("--budget", o.budget, "largest C(|V|,n) scanned exhaustively before sampling");
    density->add_option("--seed", o.seed, "sampling seed");
    density->add_option("--restarts", o.restarts, "sampling restarts per row");
    density->add_option("--out", o.out, "write the table (.csv or JSON)");

    auto* oracle = app.add_subcommand("oracle-check", "compare the analytic lemmas against the graph");
    graph_flags(oracle, true);
    common(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    Runner r(o, out);
    try {
        if (gen->parsed()) return r.gen();
        if (vcdim->parsed()) return r.vcdim();
        if (shatter->parsed()) return r.shatter();
        if (classify->parsed()) return r.classify();
        if (verify->parsed()) return r.verify();
        if (density->parsed()) return r.density();
        if (oracle->parsed()) return r.oracle_check();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

}  // namespace vcgraph::cli
