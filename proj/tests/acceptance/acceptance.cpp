// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: vcgraph_acceptance PATH_TO_CLI

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "vcgraph/vcgraph.hpp"

using namespace vcgraph;

namespace {

// Pinned tolerances.
constexpr std::size_t kDiagSamples = 1000;
constexpr std::uint64_t kDiagSeed = 0x9e3779b9;
constexpr std::size_t kDensityNmax = 5;
constexpr double kSlopeLow = 1.5, kSlopeHigh = 2.5;
constexpr int kDeterminismRuns = 3;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (ok) detail << what;
        else if (detail.str().size() < 400) detail << "; " << what;
        ok = false;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

int failures = 0;

template <class Body>
void criterion(const std::string& id, const std::string& title, Body&& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s %s: %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
                o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
    std::fflush(stdout);
}

std::size_t vc_of(const Graph& g) {
    const auto r = vc_dimension_edge(g);
    return std::get<std::size_t>(r.dimension);
}

// Certificates of shattered sets with at least 4 elements seen during the run.
std::vector<std::pair<FamilyTag, std::vector<VertexId>>> big_certificates;

void remember(const Graph& g, const VcResult& r) {
    if (r.certificate && r.certificate->base_set.size() >= 4)
        big_certificates.emplace_back(g.family(), r.certificate->base_set);
}

// Exhaustive: no n-subset of any neighbourhood is shattered.
bool none_shattered_in_neighbourhoods(const Graph& g, std::size_t n) {
    const auto ss = neighborhood_system(g);
    for (const auto& member : ss.family()) {
        const auto elems = member.to_vector();
        if (detail::first_shattered(ss, elems, n, 0)) return false;
    }
    return true;
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion("AC1", "exact VC-dimension of the tight instances", [](Outcome& o) {
        for (auto [tag, want] : std::vector<std::pair<FamilyTag, std::size_t>>{
                 {{Family::Johnson, {7, 2}}, 4}, {{Family::Johnson, {6, 3}}, 4}, {{Family::Hamming, {3, 3}}, 3},
                 {{Family::Hamming, {2, 4}}, 3}, {{Family::Hamming, {4, 2}}, 3}}) {
            const Graph g = build_graph(tag);
            const auto r = vc_dimension_edge(g);
            remember(g, r);
            const auto got = std::get<std::size_t>(r.dimension);
            o.expect(got == want, tag.name() + " gave " + std::to_string(got));
            o.expect(r.certificate && r.certificate->verify(neighborhood_system(g)), tag.name() + " certificate");
        }
    });

    criterion("AC2", "no shattered 5-set in Johnson, no shattered 4-set in Hamming", [](Outcome& o) {
        for (const auto& tag : {FamilyTag{Family::Johnson, {7, 2}}, FamilyTag{Family::Johnson, {6, 3}},
                                FamilyTag{Family::Johnson, {8, 4}}})
            o.expect(none_shattered_in_neighbourhoods(build_graph(tag), 5), tag.name());
        for (const auto& tag : {FamilyTag{Family::Hamming, {3, 3}}, FamilyTag{Family::Hamming, {2, 4}},
                                FamilyTag{Family::Hamming, {4, 2}}, FamilyTag{Family::Hamming, {2, 5}}})
            o.expect(none_shattered_in_neighbourhoods(build_graph(tag), 4), tag.name());
        const Graph j84 = make_johnson(8, 4);
        remember(j84, vc_dimension_edge(j84));
    });

    criterion("AC3", "pinned values below the tightness boundary", [](Outcome& o) {
        std::vector<std::pair<FamilyTag, std::size_t>> pinned{{{Family::Johnson, {5, 2}}, 2},
                                                              {{Family::Johnson, {6, 2}}, 3},
                                                              {{Family::Hamming, {2, 3}}, 2},
                                                              {{Family::Hamming, {3, 2}}, 2},
                                                              {{Family::Hamming, {2, 2}}, 1}};
        pinned.push_back({{Family::Johnson, {1, 1}}, 0});
        for (int m = 2; m <= 10; ++m) pinned.push_back({{Family::Johnson, {m, 1}}, 1});
        for (const auto& [tag, want] : pinned) {
            const auto got = vc_of(build_graph(tag));
            o.expect(got == want, tag.name() + " gave " + std::to_string(got));
            const bool johnson = tag.family == Family::Johnson;
            o.expect(got < (johnson ? 4u : 3u), tag.name() + " reaches the tight value");
        }
    });

    criterion("AC4", "analytic lemmas against brute force, all vertex pairs", [](Outcome& o) {
        std::vector<CrossCheckReport> reports;
        for (auto [m, k] : {std::pair{6, 3}, std::pair{7, 2}, std::pair{7, 3}}) reports.push_back(johnson_cross_check(m, k));
        for (auto [d, q] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 2}}) reports.push_back(hamming_cross_check(d, q));
        for (const auto& r : reports)
            for (const auto& c : r.checks) {
                o.expect(c.comparisons > 0, r.graph.name() + " " + c.name + " ran nothing");
                o.expect(c.mismatches == 0, r.graph.name() + " " + c.name + ": " + c.first_mismatch);
            }
    });

    criterion("AC5", "J(10,5) neighbourhood quads fall into 16 cases, 8 shattered", [](Outcome& o) {
        const Graph g = make_johnson(10, 5);
        const auto ss = neighborhood_system(g);
        const auto v = SubsetLabel{{1, 2, 3, 4, 5}};
        const auto nbrs = g.neighbors(g.vertex_of(v)).to_vector();
        std::map<int, std::set<bool>> outcomes;
        std::map<int, std::vector<VertexId>> representative;
        for_each_combination(static_cast<int>(nbrs.size()), 4, [&](std::span<const int> c) {
            std::array<SubsetLabel, 4> quad;
            std::vector<VertexId> ids;
            for (std::size_t i = 0; i < 4; ++i) {
                ids.push_back(nbrs[static_cast<std::size_t>(c[i])]);
                quad[i] = std::get<SubsetLabel>(g.label(ids.back()));
            }
            std::sort(ids.begin(), ids.end());
            const auto id = classify_four_subset(v, quad);
            const auto cert = is_shattered(ss, ids);
            outcomes[id.value].insert(cert.has_value());
            representative.try_emplace(id.value, ids);
            if (cert) big_certificates.emplace_back(g.family(), ids);
            return true;
        });
        o.expect(outcomes.size() == 16, "found " + std::to_string(outcomes.size()) + " cases");
        std::size_t shattering = 0;
        for (const auto& [value, seen] : outcomes) {
            o.expect(seen.size() == 1, "case " + roman(value) + " is mixed");
            const bool rep = is_shattered(ss, representative[value]).has_value();
            o.expect(rep == (value >= 9), "case " + roman(value) + " representative");
            shattering += rep ? 1 : 0;
        }
        o.expect(shattering == 8, std::to_string(shattering) + " shattering cases");
    });

    criterion("AC6", "distance-2 triples never appear in shattered sets", [](Outcome& o) {
        std::size_t checked = 0;
        for (const auto& [tag, base] : big_certificates) {
            if (tag.family != Family::Johnson) continue;
            const Graph g = build_graph(tag);
            std::vector<SubsetLabel> labels;
            for (auto x : base) labels.push_back(std::get<SubsetLabel>(g.label(x)));
            o.expect(!has_distance2_triple(labels), tag.name() + " certificate has a triple");
            ++checked;
        }
        o.expect(checked > 0, "no certificates collected");
        const Graph g = make_johnson(9, 4);
        const auto ss = neighborhood_system(g);
        std::mt19937_64 rng(kDiagSeed);
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
        std::size_t tested = 0;
        while (tested < kDiagSamples) {
            auto nbrs = g.neighbors(pick(rng)).to_vector();
            std::shuffle(nbrs.begin(), nbrs.end(), rng);
            std::vector<VertexId> quad(nbrs.begin(), nbrs.begin() + 4);
            std::vector<SubsetLabel> labels;
            for (auto q : quad) labels.push_back(std::get<SubsetLabel>(g.label(q)));
            if (!has_distance2_triple(labels)) continue;
            std::sort(quad.begin(), quad.end());
            o.expect(!is_shattered(ss, quad), "random quad with a triple is shattered");
            ++tested;
        }
        o.detail << checked << " certificates, " << tested << " random quads";
    });

    criterion("AC7", "deleting one vertex never raises the VC-dimension", [](Outcome& o) {
        for (const auto& tag : {FamilyTag{Family::Johnson, {5, 2}}, FamilyTag{Family::Johnson, {6, 3}},
                                FamilyTag{Family::Hamming, {3, 2}}, FamilyTag{Family::Hamming, {2, 4}}}) {
            const Graph g = build_graph(tag);
            const auto base = vc_of(g);
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                const auto after = vc_of(delete_vertex(g, v));
                o.expect(after <= base, tag.name() + " minus " + std::to_string(v));
            }
        }
    });

    criterion("AC8", "exact shatter functions respect every bound", [](Outcome& o) {
        std::size_t rows = 0;
        for (const auto& tag : {FamilyTag{Family::Johnson, {6, 3}}, FamilyTag{Family::Johnson, {7, 2}},
                                FamilyTag{Family::Johnson, {7, 3}}, FamilyTag{Family::Hamming, {3, 3}},
                                FamilyTag{Family::Hamming, {2, 4}}, FamilyTag{Family::Rook, {3, 3}},
                                FamilyTag{Family::Rook, {2, 5}}}) {
            const Graph g = build_graph(tag);
            const auto t = pi_table(g, kDensityNmax);
            for (const auto& r : t.rows) o.expect(r.mode == PiMode::Exact, tag.name() + " row not exact");
            const auto bs = bounds::applicable(tag, vc_of(g));
            o.expect(bs.size() >= 2, tag.name() + " has too few bounds");
            for (const auto& b : bs) {
                const auto rep = check_bound(t, b);
                o.expect(rep.passed(), tag.name() + " violates " + b.name);
                rows += rep.rows.size();
            }
            if (tag.family == Family::Hamming)
                o.expect(check_recursion(t, hamming_step()).passed(), tag.name() + " step 4n+1");
            if (tag.family == Family::Johnson)
                o.expect(check_recursion(t, johnson_step(tag.params[0], tag.params[1])).passed(), tag.name() + " step");
        }
        o.detail << rows << " bound rows";
    });

    criterion("AC9", "quadratic lower-bound constructions", [](Outcome& o) {
        std::vector<DensityConstruction> cs{johnson_density_witness(9, 4), hamming_density_witness(3, 3),
                                            hamming_density_witness(2, 4)};
        for (const auto& c : cs) {
            o.expect(c.all_verified(), c.graph.name() + " pair witness");
            const Graph g = build_graph(c.graph);
            std::vector<VertexId> a;
            for (const auto& l : c.base_set) a.push_back(g.vertex_of(l));
            std::sort(a.begin(), a.end());
            o.expect(trace_count(neighborhood_system(g), a) >= binomial(a.size(), 2), c.graph.name() + " trace count");
        }
    });

    criterion("AC10", "witness bank tables verify; corrupted row is caught", [](Outcome& o) {
        const auto all = builtin_witnesses();
        o.expect(all.size() == 5, "bank size");
        for (const auto& w : all) o.expect(verify_witness(w).passed(), w.graph_spec.name());
        auto bad = all[0];
        bad.subset_witnesses[5].witness = bad.subset_witnesses[6].witness;
        o.expect(!verify_witness(bad).passed(), "corrupted row passed");
    });

    criterion("AC11", "2-neighbourhood of the cube is a subdivided clique", [](Outcome& o) {
        for (int d = 3; d <= 6; ++d) {
            const auto r = two_neighborhood_subdivision_check(d);
            o.expect(r.isomorphic && is_isomorphism(r.induced, r.subdivided, r.map), "d=" + std::to_string(d));
        }
    });

    criterion("AC12", "CLI JSON output is byte-identical across runs and thread counts", [&](Outcome& o) {
        if (cli.empty()) {
            o.fail("no CLI path given");
            return;
        }
        const std::vector<std::string> commands{
            "gen --family johnson --params 5,2 --json",
            "gen --family subdivided --params 4 --json",
            "vcdim --family johnson --params 7,2 --json",
            "vcdim --family hamming --params 3,3 --closed --json",
            "shatter --family johnson --params 7,2 --set 1.3,1.4,1.5,1.6 --json",
            "classify --family johnson --params 8,4 --quad 1.2.3.4:2.3.4.5,1.3.4.5,2.3.4.6,1.3.4.6 --json",
            "verify --builtin --json",
            "density --family rook --params 3,3 --nmax 4 --exact --json",
            "density --family johnson --params 7,3 --nmax 5 --budget 200 --seed 11 --restarts 50 --json",
            "oracle-check --family hamming --params 3,3 --json",
        };
        for (const auto& c : commands) {
            std::string first;
            for (int run = 0; run < kDeterminismRuns; ++run)
                for (const char* threads : {"1", "4"}) {
                    int status = 0;
                    const auto out = capture(cli + " " + c + " --threads " + threads, status);
                    if (status != 0) o.fail("nonzero exit: " + c);
                    if (!json::accept(out)) o.fail("not JSON: " + c);
                    if (first.empty()) first = out;
                    else if (out != first) o.fail("output differs: " + c + " threads " + threads);
                }
        }
    });

    const auto slope = density_slope_estimate(pi_table(make_johnson(8, 3), 6));
    std::printf("INFO J(8,3) log-log slope %.3f (residual %.3f, %zu rows): %s; expected in [%.1f, %.1f]\n", slope.slope,
                slope.residual, slope.rows_used, slope.flag.c_str(), kSlopeLow, kSlopeHigh);
    return failures == 0 ? 0 : 1;
}
