#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace chordext {

/// Unordered pair of distinct vertices, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool touches(Vertex w) const { return u == w || v == w; }
    constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..order-1 with unique labels.
///
/// Values are immutable once built: every operation below returns a new
/// graph. Adjacency is one VertexSet per vertex, so the order is capped at
/// kMaxOrder.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on loops, out-of-range endpoints, or duplicate labels.
    /// Parallel edges in the input collapse. Missing labels default to the
    /// decimal index.
    Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels = {})
        : adjacency_(check_order(order)), labels_(std::move(labels))
    {
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= order) throw InputError("edge endpoint out of range");
            if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
            adjacency_[e.u].insert(e.v);
            adjacency_[e.v].insert(e.u);
        }
        if (labels_.empty()) {
            for (int v = 0; v < order; ++v) labels_.push_back(std::to_string(v));
        }
        if (static_cast<int>(labels_.size()) != order) throw InputError("label count differs from order");
        std::unordered_set<std::string_view> seen;
        for (const auto& l : labels_) {
            if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
        }
    }

    Graph(int order, std::initializer_list<Edge> edges, std::vector<std::string> labels = {})
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels))
    {
    }

    /// Builds from per-vertex neighbour sets; the relation must be symmetric.
    static Graph from_adjacency(std::vector<VertexSet> adjacency, std::vector<std::string> labels = {})
    {
        const int n = check_order(static_cast<int>(adjacency.size()));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            if (!adjacency[u].subset_of(VertexSet::range(n))) throw InputError("neighbour out of range");
            for (Vertex v : adjacency[u]) {
                if (!adjacency[v].contains(u)) throw InputError("adjacency is not symmetric");
                if (u < v) edges.emplace_back(u, v);
                if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
            }
        }
        return Graph(n, edges, std::move(labels));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const
    {
        int twice = 0;
        for (const auto& nb : adjacency_) twice += nb.size();
        return twice / 2;
    }

    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbours(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
    bool has_edge(Edge e) const { return valid(e.u) && valid(e.v) && adjacent(e.u, e.v); }
    bool valid(Vertex v) const { return v >= 0 && v < order(); }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Vertex> find(std::string_view label) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<Vertex>(it - labels_.begin());
    }

    /// Vertex by label; InputError when absent.
    Vertex operator[](std::string_view label) const
    {
        if (auto v = find(label)) return *v;
        throw InputError("no vertex labelled '" + std::string(label) + "'");
    }

    VertexSet set_of(std::initializer_list<std::string_view> names) const
    {
        VertexSet s;
        for (auto name : names) s.insert((*this)[name]);
        return s;
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u) {
            for (Vertex v : adjacency_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
        }
        return out;
    }

    bool is_clique(VertexSet s) const
    {
        for (Vertex v : s) {
            if (!(s.without(v)).subset_of(adjacency_[v])) return false;
        }
        return true;
    }

    bool is_independent(VertexSet s) const
    {
        for (Vertex v : s) {
            if (adjacency_[v].intersects(s)) return false;
        }
        return true;
    }

    /// Throws InputError if s has members outside the vertex range.
    void check(VertexSet s) const
    {
        if (!s.subset_of(vertices())) throw InputError("vertex set has members outside the graph");
    }

    void check(Vertex v) const
    {
        if (!valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    }

    /// Same order and same adjacency under the identity vertex map. Labels ignored.
    bool same_adjacency(const Graph& other) const { return adjacency_ == other.adjacency_; }

    /// Same adjacency and labels.
    bool operator==(const Graph& other) const = default;

private:
    static int check_order(int order)
    {
        if (order < 0 || order > kMaxOrder) {
            throw InputError("graph order " + std::to_string(order) + " outside [0, " +
                             std::to_string(kMaxOrder) + "]");
        }
        return order;
    }

    std::vector<VertexSet> adjacency_;
    std::vector<std::string> labels_;
};

/// Vertices reachable from `start` inside `within`.
inline VertexSet reach(const Graph& g, Vertex start, VertexSet within)
{
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbours(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Connected components of g[within], ordered by lowest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within)
{
    std::vector<VertexSet> out;
    while (!within.empty()) {
        VertexSet c = reach(g, within.first(), within);
        out.push_back(c);
        within -= c;
    }
    return out;
}

inline int component_count(const Graph& g, VertexSet within)
{
    int count = 0;
    while (!within.empty()) {
        within -= reach(g, within.first(), within);
        ++count;
    }
    return count;
}

/// g[within] is connected; the empty set counts as disconnected.
inline bool connected(const Graph& g, VertexSet within)
{
    return !within.empty() && reach(g, within.first(), within) == within;
}

inline bool connected(const Graph& g) { return connected(g, g.vertices()); }

/// Result of induced_subgraph: the subgraph and each new vertex's host index.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;
};

/// g[u]. Vertices keep their relative order and labels.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet u)
{
    g.check(u);
    std::vector<Vertex> to_host = u.to_vector();
    std::vector<int> to_local(g.order(), -1);
    for (int i = 0; i < static_cast<int>(to_host.size()); ++i) to_local[to_host[i]] = i;

    std::vector<VertexSet> adjacency(to_host.size());
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(to_host.size()); ++i) {
        for (Vertex w : g.neighbours(to_host[i]) & u) adjacency[i].insert(to_local[w]);
        labels.push_back(g.label(to_host[i]));
    }
    return {Graph::from_adjacency(std::move(adjacency), std::move(labels)), std::move(to_host)};
}

/// g - removed, as a plain graph.
inline InducedSubgraph delete_vertices(const Graph& g, VertexSet removed)
{
    return induced_subgraph(g, g.vertices() - removed);
}

/// Result of clique_paste: the pasted graph and where each vertex of h landed.
struct Pasting {
    Graph graph;
    std::vector<Vertex> h_to_result;
};

/// Clique sum of g and h, identifying shared_g[i] with shared_h[i].
///
/// Vertices of g keep their indices; the remaining vertices of h follow in
/// ascending order and are labelled "<prefix>_p<i>". An empty prefix means the
/// concatenated labels of shared_g, e.g. "ab_p0" for a paste onto edge ab.
inline Pasting clique_paste(const Graph& g, const Graph& h, std::span<const Vertex> shared_g,
                            std::span<const Vertex> shared_h, std::string prefix = {})
{
    if (shared_g.size() != shared_h.size()) throw PreconditionError("shared vertex lists differ in size");
    VertexSet sg = VertexSet::from(shared_g);
    VertexSet sh = VertexSet::from(shared_h);
    for (Vertex v : shared_g) g.check(v);
    for (Vertex v : shared_h) h.check(v);
    if (sg.size() != static_cast<int>(shared_g.size()) || sh.size() != static_cast<int>(shared_h.size())) {
        throw PreconditionError("shared vertex lists repeat a vertex");
    }
    if (!g.is_clique(sg)) throw PreconditionError("shared vertices are not a clique in the first graph");
    if (!h.is_clique(sh)) throw PreconditionError("shared vertices are not a clique in the second graph");

    if (prefix.empty()) {
        for (Vertex v : shared_g) prefix += g.label(v);
    }

    const int n = g.order() + h.order() - static_cast<int>(shared_h.size());
    if (n > kMaxOrder) throw InputError("pasted graph exceeds the maximum order");

    std::vector<Vertex> h_to_result(h.order(), -1);
    for (std::size_t i = 0; i < shared_h.size(); ++i) h_to_result[shared_h[i]] = shared_g[i];
    std::vector<std::string> labels = g.labels();
    int fresh = 0;
    for (Vertex w = 0; w < h.order(); ++w) {
        if (h_to_result[w] >= 0) continue;
        h_to_result[w] = static_cast<Vertex>(labels.size());
        labels.push_back(prefix + "_p" + std::to_string(fresh++));
    }

    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.emplace_back(h_to_result[e.u], h_to_result[e.v]);
    return {Graph(n, edges, std::move(labels)), std::move(h_to_result)};
}

/// Graph with g's edge e removed.
inline Graph remove_edge(const Graph& g, Edge e)
{
    std::vector<Edge> edges = g.edges();
    std::erase(edges, e);
    return Graph(g.order(), edges, g.labels());
}

/// Graph with a new vertex `label` adjacent to `neighbours`.
inline Graph add_vertex(const Graph& g, VertexSet neighbours, std::string label)
{
    g.check(neighbours);
    std::vector<Edge> edges = g.edges();
    for (Vertex v : neighbours) edges.emplace_back(v, g.order());
    std::vector<std::string> labels = g.labels();
    labels.push_back(std::move(label));
    return Graph(g.order() + 1, edges, std::move(labels));
}

namespace make {

inline Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }

inline Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph path(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

/// K_{1,s}: centre 0, leaves 1..s.
inline Graph star(int leaves)
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

} // namespace make

} // namespace chordext
