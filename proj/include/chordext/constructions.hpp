#pragma once

// The base graph H, its heavy edges and cycles, and the chordal graphs built
// from it whose cycle D (everything but z1 and z2) has no extension.

#include "chordal.hpp"
#include "cycle.hpp"
#include "extendability.hpp"
#include "graph.hpp"
#include "hamiltonian.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chordext {

/// H together with the data the counterexample construction relies on.
struct BaseGraphH {
    Graph graph;
    /// ab, de, ef, ch, gh, in that order.
    std::vector<Edge> heavy;
    /// a,b,c,h,g,f,e,d: every vertex except z1 and z2.
    Cycle cycle_c;
    /// a,b,z1,z2,g,h,c,d,e,f: Hamiltonian.
    Cycle cycle_cstar;
    EliminationOrdering peo;
};

inline std::string edge_name(const Graph& g, Edge e) { return g.label(e.u) + g.label(e.v); }

/// Invariant failures of a BaseGraphH, empty when all hold.
inline std::vector<std::string> base_invariant_violations(const BaseGraphH& h)
{
    std::vector<std::string> out;
    const Graph& g = h.graph;
    if (g.order() != 10) out.push_back("order " + std::to_string(g.order()) + " != 10");
    if (g.size() != 29) out.push_back("size " + std::to_string(g.size()) + " != 29");
    if (h.heavy.size() != 5) out.push_back(std::to_string(h.heavy.size()) + " heavy edges instead of 5");
    for (auto name : {"a", "e"}) {
        auto v = g.find(name);
        if (!v || g.degree(*v) != g.order() - 1) out.push_back(std::string(name) + " is not universal");
    }
    for (const Edge& e : h.heavy) {
        if (!g.has_edge(e)) out.push_back("heavy pair " + edge_name(g, e) + " is not an edge");
        if (!h.cycle_c.contains_edge(e)) out.push_back("C misses heavy edge " + edge_name(g, e));
        if (!h.cycle_cstar.contains_edge(e)) out.push_back("C* misses heavy edge " + edge_name(g, e));
    }
    if (!h.cycle_c.is_cycle_of(g)) out.push_back("C is not a cycle of H");
    if (!h.cycle_cstar.is_hamiltonian_in(g)) out.push_back("C* is not a Hamiltonian cycle of H");
    try {
        if (!is_perfect_elimination(g, h.peo)) out.push_back("stored ordering is not a perfect elimination ordering");
    } catch (const InputError& e) {
        out.push_back(std::string("stored ordering invalid: ") + e.what());
    }
    return out;
}

/// The base graph H on {a,b,c,d,e,f,g,h,z1,z2} (indices 0..9 in that order).
/// a and e are universal; the other twelve edges are
/// bc, bh, bz1, cd, ch, dh, fg, gh, gz2, hz1, hz2, z1z2.
inline BaseGraphH build_H()
{
    std::vector<std::string> labels{"a", "b", "c", "d", "e", "f", "g", "h", "z1", "z2"};
    enum : Vertex { a, b, c, d, e, f, g, h, z1, z2 };
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 10; ++v) {
        if (v != a) edges.emplace_back(a, v);
        if (v != a && v != e) edges.emplace_back(e, v);
    }
    for (Edge x : {Edge(b, c), Edge(b, h), Edge(b, z1), Edge(c, d), Edge(c, h), Edge(d, h), Edge(f, g), Edge(g, h),
                   Edge(g, z2), Edge(h, z1), Edge(h, z2), Edge(z1, z2)}) {
        edges.push_back(x);
    }

    BaseGraphH base{
        Graph(10, edges, labels),
        {Edge(a, b), Edge(d, e), Edge(e, f), Edge(c, h), Edge(g, h)},
        Cycle({a, b, c, h, g, f, e, d}),
        Cycle({a, b, z1, z2, g, h, c, d, e, f}),
        {f, g, z2, z1, b, a, c, d, e, h},
    };
    if (auto bad = base_invariant_violations(base); !bad.empty()) throw ContractViolation("H invariant: " + bad.front());
    return base;
}

/// Copy of `base` with edge e deleted from the graph and nothing else
/// changed. Used for negative controls; invariants are deliberately not checked.
inline BaseGraphH with_edge_removed(const BaseGraphH& base, Edge e)
{
    BaseGraphH out = base;
    out.graph = remove_edge(base.graph, e);
    return out;
}

/// Copy of `base` where e is no longer heavy (no paste, not required).
inline BaseGraphH with_heavy_dropped(const BaseGraphH& base, Edge e)
{
    BaseGraphH out = base;
    std::erase(out.heavy, e);
    return out;
}

/// Paste K_size onto an edge; routed through its interior in label order.
struct CliquePaste {
    int size = 3;
};

/// Paste an arbitrary Hamiltonian chordal host. Its edge glue_u-glue_v must lie
/// on the witness cycle; glue_u lands on the heavy edge's lower-index end.
struct GraphPaste {
    Graph host;
    Vertex glue_u = 0;
    Vertex glue_v = 1;
    Cycle hamiltonian_witness;
};

using Paste = std::variant<CliquePaste, GraphPaste>;

/// One paste per heavy edge (in BaseGraphH::heavy order) and optionally a clique on z1z2.
struct ConstructionSpec {
    std::array<Paste, 5> heavy_pastes{CliquePaste{}, CliquePaste{}, CliquePaste{}, CliquePaste{}, CliquePaste{}};
    std::optional<CliquePaste> z12_paste;
};

struct Counterexample {
    Graph graph;
    /// The non-extendable cycle.
    Cycle d_cycle;
    /// Hamiltonian cycle.
    Cycle dstar_cycle;
    ConstructionSpec spec;
    /// Vertices off d_cycle: z1, z2 and the interior of any z1z2 paste.
    VertexSet off_d;
};

/// K_size as a GraphPaste whose glue path visits 0, 2, 3, ..., size-1, 1.
inline GraphPaste as_graph_paste(CliquePaste clique)
{
    if (clique.size < 3) throw InputError("pasted cliques need at least three vertices");
    std::vector<Vertex> seq{0};
    for (Vertex v = 2; v < clique.size; ++v) seq.push_back(v);
    seq.push_back(1);
    return GraphPaste{make::complete(clique.size), 0, 1, Cycle(std::move(seq))};
}

namespace detail {

inline GraphPaste resolve(const Paste& p)
{
    if (const auto* c = std::get_if<CliquePaste>(&p)) return as_graph_paste(*c);
    return std::get<GraphPaste>(p);
}

/// Host path glue_u -> glue_v covering every host vertex, following the witness.
inline std::vector<Vertex> glue_path(const GraphPaste& p)
{
    const Cycle& w = p.hamiltonian_witness;
    const int n = w.length();
    const int at = w.position(p.glue_u);
    const int step = (w[(at + 1) % n] == p.glue_v) ? n - 1 : 1;
    std::vector<Vertex> path;
    for (int i = 0; i < n; ++i) path.push_back(w[(at + i * step) % n]);
    return path;
}

inline void check_paste(const GraphPaste& p)
{
    const Graph& host = p.host;
    host.check(p.glue_u);
    host.check(p.glue_v);
    if (!p.hamiltonian_witness.is_hamiltonian_in(host)) {
        throw PreconditionError("paste witness is not a Hamiltonian cycle of its host");
    }
    if (!p.hamiltonian_witness.contains_edge(Edge(p.glue_u, p.glue_v))) {
        throw PreconditionError("glue edge does not lie on the host's Hamiltonian witness");
    }
    if (!is_chordal(host)) throw PreconditionError("paste host is not chordal");
}

/// Replaces each routed edge of `seq` by its interior path, in traversal direction.
inline std::vector<Vertex> reroute(const std::vector<Vertex>& seq, const std::map<Edge, std::vector<Vertex>>& routes)
{
    std::vector<Vertex> out;
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vertex x = seq[i];
        Vertex y = seq[(i + 1) % n];
        out.push_back(x);
        auto it = routes.find(Edge(x, y));
        if (it == routes.end()) continue;
        const auto& path = it->second;
        if (path.front() == x) {
            out.insert(out.end(), path.begin() + 1, path.end() - 1);
        } else {
            out.insert(out.end(), path.rbegin() + 1, path.rend() - 1);
        }
    }
    return out;
}

inline Counterexample assemble(const ConstructionSpec& spec, const BaseGraphH& base)
{
    Graph g = base.graph;
    std::map<Edge, std::vector<Vertex>> d_routes;
    for (std::size_t i = 0; i < base.heavy.size(); ++i) {
        GraphPaste p = resolve(spec.heavy_pastes[i]);
        check_paste(p);
        const Edge e = base.heavy[i];
        const Vertex shared_g[] = {e.u, e.v};
        const Vertex shared_h[] = {p.glue_u, p.glue_v};
        Pasting pasted = clique_paste(g, p.host, shared_g, shared_h, edge_name(base.graph, e));
        std::vector<Vertex> route;
        for (Vertex w : glue_path(p)) route.push_back(pasted.h_to_result[w]);
        d_routes[e] = std::move(route);
        g = std::move(pasted.graph);
    }

    const Vertex z1 = base.graph["z1"];
    const Vertex z2 = base.graph["z2"];
    std::map<Edge, std::vector<Vertex>> dstar_routes = d_routes;
    VertexSet off_d{z1, z2};
    if (spec.z12_paste) {
        GraphPaste p = as_graph_paste(*spec.z12_paste);
        const Vertex shared_g[] = {z1, z2};
        const Vertex shared_h[] = {p.glue_u, p.glue_v};
        Pasting pasted = clique_paste(g, p.host, shared_g, shared_h, "z1z2");
        std::vector<Vertex> route;
        for (Vertex w : glue_path(p)) route.push_back(pasted.h_to_result[w]);
        for (Vertex w : route) off_d.insert(w);
        dstar_routes[Edge(z1, z2)] = std::move(route);
        g = std::move(pasted.graph);
    }

    Cycle d(reroute(base.cycle_c.vertices(), d_routes));
    Cycle dstar(reroute(base.cycle_cstar.vertices(), dstar_routes));
    return Counterexample{std::move(g), std::move(d), std::move(dstar), spec, off_d};
}

} // namespace detail

/// Outcome of re-checking a Counterexample with the chordal and cycle engines.
struct Certification {
    bool chordal = false;
    bool dstar_hamiltonian = false;
    bool d_is_cycle = false;
    bool d_spans_expected = false;
    bool d_non_extendable = false;
    std::optional<ExtendabilityVerdict> verdict;

    bool ok() const { return chordal && dstar_hamiltonian && d_is_cycle && d_spans_expected && d_non_extendable; }

    std::string summary(const Graph& g) const
    {
        std::string s;
        auto add = [&](bool flag, const char* what) {
            if (!flag) s += (s.empty() ? "" : "; ") + std::string(what);
        };
        add(chordal, "not chordal");
        add(dstar_hamiltonian, "D* is not a Hamiltonian cycle");
        add(d_is_cycle, "D is not a cycle");
        add(d_spans_expected, "D does not span the expected vertices");
        if (!d_non_extendable && verdict && verdict->extension) {
            s += (s.empty() ? "" : "; ") + std::string("D extends through ") + g.label(*verdict->vertex) + " via " +
                 verdict->extension->to_string(g);
        } else {
            add(d_non_extendable, "D extendability not refuted");
        }
        return s.empty() ? "certified" : s;
    }
};

inline Certification certify(const Counterexample& ce)
{
    Certification c;
    const Graph& g = ce.graph;
    c.chordal = is_chordal(g);
    c.dstar_hamiltonian = ce.dstar_cycle.is_hamiltonian_in(g);
    c.d_is_cycle = ce.d_cycle.is_cycle_of(g);
    c.d_spans_expected = ce.d_cycle.vertex_set() == g.vertices() - ce.off_d;
    if (c.d_is_cycle && ce.d_cycle.length() < g.order()) {
        c.verdict = is_cycle_extendable(g, ce.d_cycle);
        c.d_non_extendable = !c.verdict->extendable;
    }
    return c;
}

/// Clique sizes k_1..k_5 >= 3 with sum(k_i - 2) = n - 10, spread evenly and
/// with the surplus on the earliest heavy edges.
inline std::array<int, 5> clique_sizes_for(int n)
{
    if (n < 15) throw InputError("counterexamples need n >= 15");
    std::array<int, 5> sizes{};
    const int extra = n - 10;
    for (int i = 0; i < 5; ++i) sizes[i] = 2 + extra / 5 + (i < extra % 5 ? 1 : 0);
    return sizes;
}

/// H with a clique pasted onto each heavy edge so that the order is n.
inline Counterexample build_counterexample(int n, const BaseGraphH& base = build_H())
{
    ConstructionSpec spec;
    auto sizes = clique_sizes_for(n);
    for (int i = 0; i < 5; ++i) spec.heavy_pastes[i] = CliquePaste{sizes[i]};
    return detail::assemble(spec, base);
}

/// build_counterexample(n) plus K_k pasted onto z1z2: order n + k - 2, D unchanged.
inline Counterexample build_ratio_counterexample(int n, int k, const BaseGraphH& base = build_H())
{
    if (k < 3) throw InputError("the z1z2 clique needs at least three vertices");
    ConstructionSpec spec;
    auto sizes = clique_sizes_for(n);
    for (int i = 0; i < 5; ++i) spec.heavy_pastes[i] = CliquePaste{sizes[i]};
    spec.z12_paste = CliquePaste{k};
    return detail::assemble(spec, base);
}

/// Pastes the given hosts and then certifies the result, throwing
/// ContractViolation with the certification summary when it fails.
inline Counterexample build_generalized(const ConstructionSpec& spec, const BaseGraphH& base = build_H())
{
    Counterexample ce = detail::assemble(spec, base);
    Certification c = certify(ce);
    if (!c.ok()) throw ContractViolation("generalized construction failed certification: " + c.summary(ce.graph));
    return ce;
}

/// H plus a vertex x adjacent to g and h.
inline Graph build_H_plus(const BaseGraphH& base = build_H())
{
    const Graph& h = base.graph;
    return add_vertex(h, h.set_of({"g", "h"}), "x");
}

/// H with a triangle pasted onto every heavy edge.
inline Graph build_H_star(const BaseGraphH& base = build_H()) { return build_counterexample(15, base).graph; }

} // namespace chordext
