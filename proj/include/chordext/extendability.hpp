#pragma once

// Cycle extension and the full-extendability audit.
//
// An extension of a cycle C is any cycle C' with V(C') = V(C) + {v}. Its
// existence depends only on V(C): C extends through v exactly when
// g[V(C) + {v}] is Hamiltonian, and nothing in that condition mentions the
// edges of C. The audit therefore works on vertex sets S for which g[S] is
// Hamiltonian ("cyclable sets") instead of on individual cycles.

#include "chordal.hpp"
#include "cycle.hpp"
#include "graph.hpp"
#include "hamiltonian.hpp"
#include "triangles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace chordext {

struct ExtendabilityVerdict {
    bool extendable = false;
    std::optional<Vertex> vertex;
    std::optional<Cycle> extension;
    /// Candidates examined, in the order tried.
    std::vector<Vertex> exhausted_candidates;
};

/// Vertices off the cycle, most neighbours on the cycle first, then by index.
inline std::vector<Vertex> extension_candidates(const Graph& g, VertexSet on_cycle)
{
    std::vector<Vertex> out = (g.vertices() - on_cycle).to_vector();
    std::stable_sort(out.begin(), out.end(), [&](Vertex x, Vertex y) {
        return (g.neighbours(x) & on_cycle).size() > (g.neighbours(y) & on_cycle).size();
    });
    return out;
}

namespace detail {

inline void check_non_hamiltonian_cycle(const Graph& g, const Cycle& c)
{
    c.check(g);
    if (c.length() >= g.order()) throw PreconditionError("cycle is Hamiltonian; extension is undefined");
}

inline std::optional<std::pair<Vertex, Cycle>> first_extension(const Graph& g, const Cycle& c,
                                                               std::span<const Edge> required,
                                                               std::vector<Vertex>* tried)
{
    const VertexSet on_cycle = c.vertex_set();
    for (Vertex v : extension_candidates(g, on_cycle)) {
        if (tried) tried->push_back(v);
        if ((g.neighbours(v) & on_cycle).size() < 2) continue;
        if (auto found = hamiltonian_cycle_in(g, on_cycle.with(v), required)) return std::pair{v, std::move(*found)};
    }
    return std::nullopt;
}

} // namespace detail

/// Whether some vertex v off c makes g[V(c) + {v}] Hamiltonian.
inline ExtendabilityVerdict is_cycle_extendable(const Graph& g, const Cycle& c)
{
    detail::check_non_hamiltonian_cycle(g, c);
    ExtendabilityVerdict verdict;
    if (auto found = detail::first_extension(g, c, {}, &verdict.exhausted_candidates)) {
        verdict.extendable = true;
        verdict.vertex = found->first;
        verdict.extension = std::move(found->second);
    }
    return verdict;
}

/// An extension of c that contains every required edge, trying all candidates.
inline std::optional<Cycle> extension_with_required_edges(const Graph& g, const Cycle& c,
                                                          std::span<const Edge> required)
{
    detail::check_non_hamiltonian_cycle(g, c);
    for (const Edge& e : required) {
        if (!g.has_edge(e)) throw InputError("required pair is not an edge of the graph");
    }
    if (auto found = detail::first_extension(g, c, required, nullptr)) return std::move(found->second);
    return std::nullopt;
}

/// Visits every k-subset of {0..n-1} in increasing mask order until fn returns false.
template <class Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n) return true;
    if (k == 0) return fn(VertexSet{});
    std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit_bit = (n == 64) ? 0 : std::uint64_t{1} << n;
    while (true) {
        if (!fn(VertexSet(mask))) return false;
        // Gosper's hack: next larger integer with the same popcount.
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        if (ripple == 0) return true;
        std::uint64_t next = (((ripple ^ mask) >> 2) / low) | ripple;
        if (limit_bit != 0 && next >= limit_bit) return true;
        if (next <= mask) return true;
        mask = next;
    }
}

/// Cheap necessary conditions for g[s] to be Hamiltonian.
inline bool may_be_cyclable(const Graph& g, VertexSet s)
{
    for (Vertex v : s) {
        if ((g.neighbours(v) & s).size() < 2) return false;
    }
    return connected(g, s);
}

/// Calls fn(S) for every S with 3 <= |S| <= max_size and g[S] Hamiltonian,
/// by increasing size. Stops early when fn returns false.
template <class Fn>
void for_each_cyclable_set(const Graph& g, int max_size, Fn&& fn)
{
    max_size = std::min(max_size, g.order());
    for (int k = 3; k <= max_size; ++k) {
        bool go_on = for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
            if (!may_be_cyclable(g, s)) return true;
            if (!hamiltonian_cycle_in(g, s)) return true;
            return static_cast<bool>(fn(s));
        });
        if (!go_on) return;
    }
}

inline std::vector<VertexSet> cyclable_sets(const Graph& g, int max_size)
{
    std::vector<VertexSet> out;
    for_each_cyclable_set(g, max_size, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

enum class AuditStatus { pass, fail, inconclusive };

inline const char* to_string(AuditStatus s)
{
    switch (s) {
    case AuditStatus::pass: return "pass";
    case AuditStatus::fail: return "fail";
    case AuditStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct AuditOptions {
    /// Maximum number of cyclable sets to enumerate before giving up.
    std::size_t set_budget = 10'000'000;
};

struct FullExtendabilityReport {
    AuditStatus status = AuditStatus::pass;
    /// Vertices on no triangle; nonempty means failure.
    VertexSet outside_triangles;
    /// Smallest non-extendable cyclable set (by size, then members) and a cycle on it.
    std::optional<VertexSet> witness_set;
    std::optional<Cycle> witness_cycle;
    std::size_t cyclable_set_count = 0;
    std::size_t non_extendable_count = 0;
};

/// Every vertex lies on a triangle and every non-spanning cyclable set extends.
inline FullExtendabilityReport is_fully_cycle_extendable(const Graph& g, AuditOptions options = {})
{
    FullExtendabilityReport report;
    report.outside_triangles = g.vertices() - triangle_membership(g);

    std::unordered_set<std::uint64_t> cyclable;
    bool over_budget = false;
    // Sizes below this were enumerated completely.
    int complete_below = g.order() + 1;
    for_each_cyclable_set(g, g.order(), [&](VertexSet s) {
        if (cyclable.size() >= options.set_budget) {
            over_budget = true;
            complete_below = s.size();
            return false;
        }
        cyclable.insert(s.bits());
        return true;
    });
    report.cyclable_set_count = cyclable.size();

    for (std::uint64_t bits : cyclable) {
        VertexSet s(bits);
        if (s.size() >= g.order() || s.size() + 1 >= complete_below) continue;
        bool extends = false;
        for (Vertex v : g.vertices() - s) {
            if (cyclable.contains(s.with(v).bits())) {
                extends = true;
                break;
            }
        }
        if (extends) continue;
        ++report.non_extendable_count;
        if (!report.witness_set || smaller_witness(s, *report.witness_set)) report.witness_set = s;
    }

    if (report.witness_set) report.witness_cycle = hamiltonian_cycle_in(g, *report.witness_set);
    if (report.witness_set || !report.outside_triangles.empty()) {
        report.status = AuditStatus::fail;
    } else if (over_budget) {
        report.status = AuditStatus::inconclusive;
    }
    return report;
}

/// Cycles of every length 3..order exist.
inline bool is_pancyclic(const Graph& g)
{
    if (g.order() < 3) return false;
    for (int k = 3; k <= g.order(); ++k) {
        bool found = false;
        for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
            if (may_be_cyclable(g, s) && hamiltonian_cycle_in(g, s)) found = true;
            return !found;
        });
        if (!found) return false;
    }
    return true;
}

/// Hamiltonian cycle of g - v, obtained by shortcutting the simplicial vertex
/// v out of a Hamiltonian cycle of g (its two cycle neighbours are adjacent).
///
/// The result is expressed in g - v's vertex numbering. Returns nothing when
/// g has order 3, since g - v is then an edge.
inline std::optional<Cycle> reduce_by_simplicial(const Graph& g, Vertex v,
                                                 std::optional<Cycle> hamiltonian = std::nullopt)
{
    g.check(v);
    if (!is_simplicial(g, v)) throw PreconditionError("vertex " + g.label(v) + " is not simplicial");
    if (!hamiltonian) hamiltonian = is_hamiltonian(g);
    if (!hamiltonian) throw PreconditionError("graph is not Hamiltonian");
    if (!hamiltonian->is_hamiltonian_in(g)) throw InputError("supplied cycle is not a Hamiltonian cycle of the graph");
    if (g.order() <= 3) return std::nullopt;

    const auto& seq = hamiltonian->vertices();
    const int at = hamiltonian->position(v);
    const int n = hamiltonian->length();
    Vertex before = seq[(at + n - 1) % n];
    Vertex after = seq[(at + 1) % n];
    if (!g.adjacent(before, after)) throw ContractViolation("neighbours of a simplicial vertex are not adjacent");

    std::vector<Vertex> shortcut;
    for (int i = 1; i < n; ++i) {
        Vertex w = seq[(at + i) % n];
        shortcut.push_back(w > v ? w - 1 : w);
    }
    return Cycle(std::move(shortcut));
}

/// A vertex of c other than e's ends, adjacent to both ends.
///
/// In a chordal host this always exists: g[V(c)] is Hamiltonian, so some
/// cycle passes through e, and the shortest one is a triangle.
inline Vertex common_cycle_neighbour(const Graph& g, const Cycle& c, Edge e)
{
    c.check(g);
    if (!g.has_edge(e)) throw InputError("pair is not an edge of the graph");
    const VertexSet on_cycle = c.vertex_set();
    if (!on_cycle.contains(e.u) || !on_cycle.contains(e.v)) throw PreconditionError("edge ends are not on the cycle");
    VertexSet common = g.neighbours(e.u) & g.neighbours(e.v) & on_cycle;
    if (common.empty()) {
        throw ContractViolation("edge " + g.label(e.u) + g.label(e.v) +
                                " has no common neighbour on the cycle; the host is not chordal");
    }
    return common.first();
}

} // namespace chordext
