#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vcgraph/combinatorics.hpp"
#include "vcgraph/detail/parallel.hpp"
#include "vcgraph/errors.hpp"
#include "vcgraph/graph.hpp"
#include "vcgraph/vertex_set.hpp"

namespace vcgraph {

enum class Origin { OpenNeighborhoods, ClosedNeighborhoods, Explicit };
enum class NeighborhoodMode { Open, Closed };

/// Universe {0..universe_size-1} plus a family of member sets. Duplicate
/// members are stored; traces are always deduplicated.
class SetSystem {
public:
    SetSystem(std::size_t universe_size, std::vector<VertexSet> family, Origin origin = Origin::Explicit,
              FamilyTag source = {})
        : universe_size_(universe_size), family_(std::move(family)), origin_(origin), source_(std::move(source)) {
        containing_.assign(universe_size_, VertexSet(family_.size()));
        for (std::size_t j = 0; j < family_.size(); ++j) {
            if (family_[j].size() != universe_size_)
                throw InvalidArgument("member " + std::to_string(j) + " is not a subset of the universe");
            family_[j].for_each([&](VertexId x) { containing_[x].insert(static_cast<VertexId>(j)); });
        }
        auto sorted = family_;
        auto less = [](const VertexSet& a, const VertexSet& b) {
            return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(), b.words().end());
        };
        std::sort(sorted.begin(), sorted.end(), less);
        distinct_members_ = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    std::size_t universe_size() const noexcept { return universe_size_; }
    std::span<const VertexSet> family() const noexcept { return family_; }
    const VertexSet& member(std::size_t j) const { return family_.at(j); }
    /// Member indices whose set contains x.
    const VertexSet& containing(VertexId x) const { return containing_.at(x); }
    std::size_t distinct_member_count() const noexcept { return distinct_members_; }
    Origin origin() const noexcept { return origin_; }
    const FamilyTag& source() const noexcept { return source_; }

private:
    std::size_t universe_size_;
    std::vector<VertexSet> family_;
    std::vector<VertexSet> containing_;
    std::size_t distinct_members_ = 0;
    Origin origin_;
    FamilyTag source_;
};

/// One member per vertex: N(v) in open mode, N(v) plus v in closed mode.
inline SetSystem neighborhood_system(const Graph& g, NeighborhoodMode mode = NeighborhoodMode::Open) {
    std::vector<VertexSet> family;
    family.reserve(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        family.push_back(g.neighbors(v));
        if (mode == NeighborhoodMode::Closed) family.back().insert(v);
    }
    return SetSystem(g.num_vertices(), std::move(family),
                     mode == NeighborhoodMode::Open ? Origin::OpenNeighborhoods : Origin::ClosedNeighborhoods,
                     g.family());
}

/// Distinct intersections {S & a : S in family}, sorted.
inline std::vector<VertexSet> trace(const SetSystem& ss, const VertexSet& a) {
    if (a.size() != ss.universe_size()) throw InvalidArgument("trace: set is not over the universe");
    std::vector<VertexSet> out;
    out.reserve(ss.family().size());
    for (const auto& s : ss.family()) out.push_back(s & a);
    auto less = [](const VertexSet& x, const VertexSet& y) {
        return std::lexicographical_compare(x.words().begin(), x.words().end(), y.words().begin(), y.words().end());
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::size_t trace_count(const SetSystem& ss, std::span<const VertexId> a) {
    return trace(ss, VertexSet::from_range(ss.universe_size(), a)).size();
}

/// Base set A (ascending) plus, for each subset mask over A's positions, the
/// lowest-index member whose intersection with A is exactly that subset.
struct ShatterCertificate {
    std::vector<VertexId> base_set;
    std::vector<VertexId> witnesses;

    bool operator==(const ShatterCertificate&) const = default;

    /// Rechecks every witness against the system.
    bool verify(const SetSystem& ss) const {
        if (base_set.size() > 30 || witnesses.size() != (std::size_t{1} << base_set.size())) return false;
        for (std::size_t mask = 0; mask < witnesses.size(); ++mask) {
            if (witnesses[mask] >= ss.family().size()) return false;
            const auto& s = ss.member(witnesses[mask]);
            for (std::size_t i = 0; i < base_set.size(); ++i)
                if (s.contains(base_set[i]) != (((mask >> i) & 1u) != 0)) return false;
        }
        return true;
    }
};

namespace detail {

inline void check_subset_ids(const SetSystem& ss, std::span<const VertexId> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= ss.universe_size())
            throw InvalidArgument("vertex id " + std::to_string(a[i]) + " outside the universe");
        for (std::size_t j = 0; j < i; ++j)
            if (a[j] == a[i]) throw InvalidArgument("duplicate vertex id " + std::to_string(a[i]) + " in set");
    }
}

/// Trace masks of every member over the positions of `a` (bit i <-> a[i]).
inline std::vector<std::uint64_t> member_masks(const SetSystem& ss, std::span<const VertexId> a) {
    std::vector<std::uint64_t> masks(ss.family().size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        ss.containing(a[i]).for_each([&](VertexId j) { masks[j] |= std::uint64_t{1} << i; });
    return masks;
}

inline std::optional<ShatterCertificate> certify(const SetSystem& ss, std::span<const VertexId> a) {
    const std::size_t full = std::size_t{1} << a.size();
    constexpr VertexId none = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> witnesses(full, none);
    auto masks = member_masks(ss, a);
    std::size_t found = 0;
    for (std::size_t j = 0; j < masks.size() && found < full; ++j) {
        auto& w = witnesses[masks[j]];
        if (w == none) {
            w = static_cast<VertexId>(j);
            ++found;
        }
    }
    if (found != full) return std::nullopt;
    return ShatterCertificate{{a.begin(), a.end()}, std::move(witnesses)};
}

/// Per-worker buffers for the colex depth-first scans.
class ScanScratch {
public:
    void prepare(std::size_t family_size, std::size_t depth) {
        levels_.assign(depth + 1, std::vector<std::uint64_t>(family_size, 0));
        leaf_.assign(family_size, 0);
        bits_ = depth;
        if (depth <= kStampBits) {
            stamp_.assign(std::size_t{1} << depth, 0);
            generation_ = 0;
        }
    }

    std::vector<std::uint64_t>& level(std::size_t d) { return levels_[d]; }
    std::vector<std::uint64_t>& leaf() { return leaf_; }

    std::size_t count_distinct(const std::vector<std::uint64_t>& masks) {
        if (bits_ <= kStampBits) {
            if (++generation_ == 0) {
                std::fill(stamp_.begin(), stamp_.end(), 0);
                generation_ = 1;
            }
            std::size_t c = 0;
            for (auto m : masks) {
                auto& s = stamp_[m];
                if (s != generation_) {
                    s = generation_;
                    ++c;
                }
            }
            return c;
        }
        sort_buf_ = masks;
        std::sort(sort_buf_.begin(), sort_buf_.end());
        return static_cast<std::size_t>(std::unique(sort_buf_.begin(), sort_buf_.end()) - sort_buf_.begin());
    }

private:
    static constexpr std::size_t kStampBits = 22;
    std::vector<std::vector<std::uint64_t>> levels_;
    std::vector<std::uint64_t> leaf_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint64_t> sort_buf_;
    std::uint32_t generation_ = 0;
    std::size_t bits_ = 0;
};

inline void apply_element(const SetSystem& ss, const std::vector<std::uint64_t>& from, std::vector<std::uint64_t>& to,
                          VertexId x, std::uint64_t bit) {
    to = from;
    ss.containing(x).for_each([&](VertexId j) { to[j] |= bit; });
}

/// Depth-first colex enumeration of n-subsets of `elems` whose largest
/// element is elems[top]. Elements are chosen largest-first; the element at
/// depth d occupies bit n-1-d so masks align with ascending base sets.
/// `visit(chosen, scratch_level)` is called at the leaves with the masks of
/// the full set and returns false to stop. When `prune_unshattered` is set,
/// subtrees whose partial set is not shattered are skipped.
template <typename Visit>
bool colex_branch(const SetSystem& ss, std::span<const VertexId> elems, std::size_t n, std::size_t top,
                  ScanScratch& scratch, bool prune_unshattered, Visit&& visit) {
    std::vector<std::size_t> pos(n);
    std::vector<VertexId> chosen(n);
    std::fill(scratch.level(0).begin(), scratch.level(0).end(), 0);

    // Returns false when the visitor asked to stop.
    auto descend = [&](auto&& self, std::size_t depth, std::size_t hi) -> bool {
        const std::size_t remaining = n - depth;
        for (std::size_t p = remaining - 1; p < hi; ++p) {
            const std::uint64_t bit = std::uint64_t{1} << (n - 1 - depth);
            auto& next = scratch.level(depth + 1);
            apply_element(ss, scratch.level(depth), next, elems[p], bit);
            pos[depth] = p;
            if (prune_unshattered && scratch.count_distinct(next) != (std::size_t{1} << (depth + 1))) continue;
            if (depth + 1 == n) {
                for (std::size_t d = 0; d < n; ++d) chosen[n - 1 - d] = elems[pos[d]];
                if (!visit(std::as_const(chosen), std::as_const(next))) return false;
            } else if (!self(self, depth + 1, p)) {
                return false;
            }
        }
        return true;
    };

    const std::uint64_t top_bit = std::uint64_t{1} << (n - 1);
    apply_element(ss, scratch.level(0), scratch.level(1), elems[top], top_bit);
    pos[0] = top;
    if (prune_unshattered && scratch.count_distinct(scratch.level(1)) != 2) return true;
    if (n == 1) {
        chosen[0] = elems[top];
        return visit(std::as_const(chosen), std::as_const(scratch.level(1)));
    }
    return descend(descend, 1, top);
}

/// Colex-first shattered n-subset of `elems`, searched in parallel by top
/// element. Deterministic: the lowest top element with a hit wins.
inline std::optional<std::vector<VertexId>> first_shattered(const SetSystem& ss, std::span<const VertexId> elems,
                                                           std::size_t n, unsigned threads) {
    if (n == 0) {
        if (ss.family().empty()) return std::nullopt;
        return std::vector<VertexId>{};
    }
    if (n > 30 || elems.size() < n || (std::uint64_t{1} << n) > ss.distinct_member_count()) return std::nullopt;
    const std::size_t branches = elems.size() - n + 1;
    std::vector<std::optional<std::vector<VertexId>>> hits(branches);
    std::atomic<std::size_t> best_top{std::numeric_limits<std::size_t>::max()};
    std::vector<ScanScratch> scratch(resolve_threads(threads));
    parallel_for(branches, threads, [&](std::size_t b, unsigned worker) {
        if (b >= best_top.load()) return;
        auto& s = scratch[worker];
        s.prepare(ss.family().size(), n);
        colex_branch(ss, elems, n, b + n - 1, s, true, [&](const std::vector<VertexId>& chosen, const auto&) {
            hits[b] = chosen;
            return false;
        });
        if (hits[b]) {
            std::size_t cur = best_top.load();
            while (b < cur && !best_top.compare_exchange_weak(cur, b)) {
            }
        }
    });
    for (auto& h : hits)
        if (h) return h;
    return std::nullopt;
}

}  // namespace detail

/// Certificate when `a` is shattered, nullopt otherwise. Witnesses are the
/// lowest-index qualifying members; mask bit i refers to a[i].
inline std::optional<ShatterCertificate> is_shattered(const SetSystem& ss, std::span<const VertexId> a) {
    if (a.size() > 30) throw InvalidArgument("is_shattered supports sets of at most 30 elements");
    detail::check_subset_ids(ss, a);
    if ((std::uint64_t{1} << a.size()) > ss.family().size()) return std::nullopt;
    return detail::certify(ss, a);
}

struct NegativeInfinity {
    bool operator==(const NegativeInfinity&) const = default;
};

/// VC-dimension value: -infinity for the empty family, otherwise a size.
using VcValue = std::variant<NegativeInfinity, std::size_t>;

inline bool is_negative_infinity(const VcValue& v) { return std::holds_alternative<NegativeInfinity>(v); }

inline std::string to_string(const VcValue& v) {
    if (is_negative_infinity(v)) return "-inf";
    return std::to_string(std::get<std::size_t>(v));
}

struct VcResult {
    VcValue dimension;
    std::optional<ShatterCertificate> certificate;
    /// False when a budgeted search stopped early; dimension is then a lower bound.
    bool complete = true;
};

struct VcOptions {
    unsigned threads = 0;
    /// Upper limit on C(universe, n) for the generic search; 0 means unlimited.
    std::uint64_t max_subsets = 0;
};

/// Generic VC-dimension: for n = 0, 1, ... scans all n-subsets of the
/// universe in colex order and stops at the first n with no shattered set.
inline VcResult vc_dimension(const SetSystem& ss, const VcOptions& opts = {}) {
    if (ss.family().empty()) return {NegativeInfinity{}, std::nullopt, true};
    std::vector<VertexId> universe(ss.universe_size());
    for (VertexId i = 0; i < universe.size(); ++i) universe[i] = i;
    VcResult result{std::size_t{0}, detail::certify(ss, {}), true};
    for (std::size_t n = 1; n <= universe.size(); ++n) {
        if (opts.max_subsets != 0 && binomial(universe.size(), n) > opts.max_subsets) {
            result.complete = false;
            break;
        }
        auto hit = detail::first_shattered(ss, universe, n, opts.threads);
        if (!hit) break;
        result.dimension = n;
        result.certificate = detail::certify(ss, *hit);
    }
    return result;
}

/// VC-dimension using the fact that a shattered nonempty set is its own
/// trace, so it lies inside some member: candidates are drawn from single
/// members only. Returns the same colex-first certificate as vc_dimension.
inline VcResult vc_dimension_pruned(const SetSystem& ss, unsigned threads = 0) {
    if (ss.family().empty()) return {NegativeInfinity{}, std::nullopt, true};
    VcResult result{std::size_t{0}, detail::certify(ss, {}), true};
    std::vector<std::vector<VertexId>> members;
    members.reserve(ss.family().size());
    for (const auto& s : ss.family()) members.push_back(s.to_vector());
    for (std::size_t n = 1; n <= 30; ++n) {
        if ((std::uint64_t{1} << n) > ss.distinct_member_count()) break;
        std::vector<std::optional<std::vector<VertexId>>> hits(members.size());
        // Parallelism lives inside first_shattered; members are scanned in order.
        for (std::size_t j = 0; j < members.size(); ++j)
            if (members[j].size() >= n) hits[j] = detail::first_shattered(ss, members[j], n, threads);
        std::optional<std::vector<VertexId>> best;
        for (auto& h : hits)
            if (h && (!best || colex_less(*h, *best))) best = std::move(h);
        if (!best) break;
        result.dimension = n;
        result.certificate = detail::certify(ss, *best);
    }
    return result;
}

/// VC-dimension of the edge relation (open neighbourhoods) of g.
inline VcResult vc_dimension_edge(const Graph& g, unsigned threads = 0) {
    if (g.num_vertices() == 0) throw InvalidArgument("vc_dimension_edge needs a nonempty graph");
    return vc_dimension_pruned(neighborhood_system(g, NeighborhoodMode::Open), threads);
}

/// sum_{i=0..d} C(n, i), saturating.
constexpr std::uint64_t sauer_shelah_bound(std::uint64_t d, std::uint64_t n) noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= d && i <= n; ++i) {
        auto c = binomial(n, i);
        if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
        total += c;
    }
    return total;
}

struct SearchBudget {
    /// Largest C(universe, n) scanned exhaustively.
    std::uint64_t exhaustive_cap = 50'000'000;
    std::uint64_t seed = 0x5eed5eedULL;
    std::size_t restarts = 10'000;
    /// Random single-element swaps tried per restart during local search.
    std::size_t swap_evaluations = 256;
    unsigned threads = 0;
};

enum class PiMode { Exact, LowerBound };

inline std::string to_string(PiMode m) { return m == PiMode::Exact ? "exact" : "lower_bound"; }

struct PiRow {
    std::size_t n = 0;
    std::uint64_t pi = 0;
    PiMode mode = PiMode::Exact;
    std::vector<VertexId> witness;

    bool operator==(const PiRow&) const = default;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline PiRow exact_max_trace(const SetSystem& ss, std::size_t n, unsigned threads) {
    const std::size_t u = ss.universe_size();
    const std::uint64_t ceiling =
        std::min<std::uint64_t>(n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n),
                                ss.distinct_member_count());
    std::vector<VertexId> elems(u);
    for (VertexId i = 0; i < u; ++i) elems[i] = i;
    const std::size_t branches = u - n + 1;
    std::vector<PiRow> best(branches);
    std::atomic<std::size_t> ceiling_top{std::numeric_limits<std::size_t>::max()};
    std::vector<ScanScratch> scratch(resolve_threads(threads));
    parallel_for(branches, threads, [&](std::size_t b, unsigned worker) {
        if (b > ceiling_top.load()) return;
        auto& s = scratch[worker];
        s.prepare(ss.family().size(), n);
        auto& row = best[b];
        row.n = n;
        colex_branch(ss, elems, n, b + n - 1, s, false, [&](const std::vector<VertexId>& chosen, const auto& masks) {
            const std::uint64_t c = s.count_distinct(masks);
            if (c > row.pi) {
                row.pi = c;
                row.witness = chosen;
            }
            return c < ceiling;
        });
        if (row.pi == ceiling) {
            std::size_t cur = ceiling_top.load();
            while (b < cur && !ceiling_top.compare_exchange_weak(cur, b)) {
            }
        }
    });
    PiRow out{n, 0, PiMode::Exact, {}};
    for (std::size_t b = 0; b < branches; ++b) {
        if (b > ceiling_top.load()) break;
        if (best[b].pi > out.pi) out = best[b];
    }
    out.mode = PiMode::Exact;
    return out;
}

inline std::uint64_t trace_size(const SetSystem& ss, std::span<const VertexId> a, ScanScratch& s) {
    auto& masks = s.leaf();
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        ss.containing(a[i]).for_each([&](VertexId j) { masks[j] |= std::uint64_t{1} << i; });
    return s.count_distinct(masks);
}

inline PiRow sampled_max_trace(const SetSystem& ss, std::size_t n, const SearchBudget& budget) {
    const std::size_t u = ss.universe_size();
    const std::size_t restarts = std::max<std::size_t>(budget.restarts, 1);
    std::vector<PiRow> results(restarts);
    std::vector<ScanScratch> scratch(resolve_threads(budget.threads));
    parallel_for(restarts, budget.threads, [&](std::size_t r, unsigned worker) {
        auto& s = scratch[worker];
        s.prepare(ss.family().size(), n);
        std::mt19937_64 rng(splitmix64(budget.seed ^ splitmix64(r)));
        std::vector<VertexId> pool(u);
        for (VertexId i = 0; i < u; ++i) pool[i] = i;
        for (std::size_t i = 0; i < n; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, u - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        std::vector<VertexId> cur(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        std::uint64_t value = trace_size(ss, cur, s);
        if (n < u) {
            std::uniform_int_distribution<std::size_t> pick_in(0, n - 1);
            std::uniform_int_distribution<std::size_t> pick_out(n, u - 1);
            for (std::size_t step = 0; step < budget.swap_evaluations; ++step) {
                const std::size_t i = pick_in(rng);
                const std::size_t o = pick_out(rng);
                std::swap(pool[i], pool[o]);
                std::vector<VertexId> cand(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
                const std::uint64_t v = trace_size(ss, cand, s);
                if (v > value) {
                    value = v;
                    cur = std::move(cand);
                } else {
                    std::swap(pool[i], pool[o]);
                }
            }
        }
        std::sort(cur.begin(), cur.end());
        results[r] = PiRow{n, value, PiMode::LowerBound, std::move(cur)};
    });
    PiRow out = results[0];
    for (const auto& row : results)
        if (row.pi > out.pi || (row.pi == out.pi && colex_less(row.witness, out.witness))) out = row;
    return out;
}

}  // namespace detail

/// pi(n): the largest trace size over n-subsets of the universe. Exact when
/// C(universe, n) fits the budget, otherwise a seeded lower bound.
inline PiRow shatter_function(const SetSystem& ss, std::size_t n, const SearchBudget& budget = {}) {
    if (n > ss.universe_size()) throw InvalidArgument("shatter_function: n exceeds the universe size");
    if (n > 63) throw InvalidArgument("shatter_function supports n <= 63");
    if (n == 0 || ss.family().empty()) return PiRow{n, ss.family().empty() ? 0u : 1u, PiMode::Exact, {}};
    if (binomial(ss.universe_size(), n) <= budget.exhaustive_cap) return detail::exact_max_trace(ss, n, budget.threads);
    return detail::sampled_max_trace(ss, n, budget);
}

}  // namespace vcgraph
