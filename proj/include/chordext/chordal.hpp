#pragma once

#include "graph.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace chordext {

/// Vertex permutation; position i holds the i-th vertex eliminated.
using EliminationOrdering = std::vector<Vertex>;

/// Reverse of a lexicographic breadth-first visit order. Ties between
/// candidates with equal maximal labels go to the lowest vertex index.
/// For chordal g the result is a perfect elimination ordering.
inline EliminationOrdering lex_bfs(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> label(n);
    VertexSet unvisited = g.vertices();
    EliminationOrdering visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = unvisited.first();
        for (Vertex v : unvisited) {
            if (label[v] > label[best]) best = v;
        }
        visit.push_back(best);
        unvisited.erase(best);
        for (Vertex w : g.neighbours(best) & unvisited) label[w].push_back(n - step);
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

inline void check_permutation(const Graph& g, const EliminationOrdering& o)
{
    if (static_cast<int>(o.size()) != g.order()) throw InputError("ordering length differs from graph order");
    VertexSet seen;
    for (Vertex v : o) {
        g.check(v);
        if (seen.contains(v)) throw InputError("ordering repeats vertex " + std::to_string(v));
        seen.insert(v);
    }
}

/// Every vertex's later neighbours in o form a clique.
inline bool is_perfect_elimination(const Graph& g, const EliminationOrdering& o)
{
    check_permutation(g, o);
    VertexSet later = g.vertices();
    for (Vertex v : o) {
        later.erase(v);
        if (!g.is_clique(g.neighbours(v) & later)) return false;
    }
    return true;
}

inline bool is_chordal(const Graph& g) { return is_perfect_elimination(g, lex_bfs(g)); }

inline bool is_simplicial(const Graph& g, Vertex v) { return g.is_clique(g.neighbours(v)); }

inline VertexSet simplicial_vertices(const Graph& g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (is_simplicial(g, v)) out.insert(v);
    }
    return out;
}

/// A vertex cut together with the components it leaves behind.
struct Separator {
    VertexSet cut;
    std::vector<VertexSet> components;

    bool operator==(const Separator&) const = default;
};

inline VertexSet open_neighbourhood(const Graph& g, VertexSet s)
{
    VertexSet out;
    for (Vertex v : s) out |= g.neighbours(v);
    return out - s;
}

/// All inclusion-minimal separators of a connected graph, sorted by
/// (size, members).
///
/// Uses the closure of Berry, Bordat and Cogis: seeds are N(C) for the
/// components C of G - N[v]; each separator S generates N(C) for the
/// components C of G - (S u N(x)), x in S. A disconnected graph yields the
/// single empty separator carrying its components.
inline std::vector<Separator> minimal_separators(const Graph& g)
{
    const VertexSet all = g.vertices();
    if (g.order() == 0) return {};
    if (!connected(g)) return {Separator{VertexSet{}, components(g, all)}};

    auto cmp = [](VertexSet a, VertexSet b) { return smaller_witness(a, b); };
    std::set<VertexSet, decltype(cmp)> found(cmp);
    std::vector<VertexSet> pending;
    auto add_from = [&](VertexSet removed) {
        for (VertexSet c : components(g, all - removed)) {
            VertexSet s = open_neighbourhood(g, c);
            if (!s.empty() && found.insert(s).second) pending.push_back(s);
        }
    };

    for (Vertex v = 0; v < g.order(); ++v) add_from(g.neighbours(v).with(v));
    while (!pending.empty()) {
        VertexSet s = pending.back();
        pending.pop_back();
        for (Vertex x : s) add_from(s | g.neighbours(x));
    }

    std::vector<Separator> out;
    for (VertexSet s : found) out.push_back({s, components(g, all - s)});
    return out;
}

/// Components of g - x for a clique separator x.
inline std::vector<VertexSet> clique_cut_components(const Graph& g, VertexSet x)
{
    g.check(x);
    if (!g.is_clique(x)) throw PreconditionError("cut set is not a clique");
    auto parts = components(g, g.vertices() - x);
    if (parts.size() < 2) throw PreconditionError("removing the cut set leaves the graph connected");
    return parts;
}

/// Every open neighbourhood is nonempty and induces a connected subgraph.
inline bool is_locally_connected(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!connected(g, g.neighbours(v))) return false;
    }
    return true;
}

} // namespace chordext
