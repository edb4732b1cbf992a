#pragma once

#include "cycle.hpp"
#include "graph.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace chordext {

struct HamiltonOptions {
    /// Run the biconnectivity cut test every this many search levels.
    int articulation_interval = 4;
};

namespace detail {

/// True when g[within] plus the extra edge (a, b) is 2-connected.
inline bool biconnected_with_edge(const Graph& g, VertexSet within, Vertex a, Vertex b)
{
    const int size = within.size();
    if (size < 3) return connected(g, within);

    int disc[kMaxOrder];
    int low[kMaxOrder];
    std::fill(std::begin(disc), std::end(disc), -1);
    int timer = 0;
    bool cut_found = false;

    auto nbrs = [&](Vertex v) {
        VertexSet nb = g.neighbours(v) & within;
        if (v == a) nb.insert(b);
        if (v == b) nb.insert(a);
        return nb;
    };

    auto dfs = [&](auto&& self, Vertex v, Vertex parent) -> void {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (Vertex w : nbrs(v)) {
            if (cut_found) return;
            if (disc[w] < 0) {
                ++children;
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= disc[v]) cut_found = true;
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent < 0 && children > 1) cut_found = true;
    };

    Vertex root = within.first();
    dfs(dfs, root, -1);
    if (cut_found) return false;
    for (Vertex v : within) {
        if (disc[v] < 0) return false;
    }
    return true;
}

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, VertexSet domain, std::span<const Edge> required, HamiltonOptions options)
        : g_(g), domain_(domain), options_(options), required_(g.order())
    {
        for (const Edge& e : required) {
            required_[e.u].insert(e.v);
            required_[e.v].insert(e.u);
        }
    }

    std::optional<std::vector<Vertex>> run()
    {
        if (domain_.size() < 3) return std::nullopt;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (required_[v].empty()) continue;
            if (!domain_.contains(v) || !required_[v].subset_of(domain_ & g_.neighbours(v))) return std::nullopt;
            if (required_[v].size() > 2) return std::nullopt;
        }
        for (Vertex v : domain_) {
            if ((g_.neighbours(v) & domain_).size() < 2) return std::nullopt;
        }
        if (!biconnected_with_edge(g_, domain_, domain_.first(), domain_.first())) return std::nullopt;

        start_ = domain_.first();
        path_.assign(1, start_);
        if (extend(start_, domain_.without(start_), 0)) return path_;
        return std::nullopt;
    }

private:
    bool closes(Vertex end) const
    {
        if (!g_.adjacent(end, start_)) return false;
        Vertex pred = path_[path_.size() - 2];
        Vertex second = path_[1];
        return required_[end].subset_of(VertexSet{pred, start_}) &&
               required_[start_].subset_of(VertexSet{second, end});
    }

    bool extend(Vertex end, VertexSet unvisited, int depth)
    {
        if (unvisited.empty()) return closes(end);

        const VertexSet open = unvisited | VertexSet{end, start_};
        for (Vertex w : unvisited) {
            if ((g_.neighbours(w) & open).size() < 2) return false;
        }
        if (end != start_ && depth % options_.articulation_interval == 0 &&
            !biconnected_with_edge(g_, open, end, start_)) {
            return false;
        }

        VertexSet candidates = g_.neighbours(end) & unvisited;
        if (end == start_) {
            if (!required_[start_].empty()) candidates &= VertexSet::single(required_[start_].first());
        } else {
            VertexSet pending = required_[end].without(path_[path_.size() - 2]);
            if (pending.size() > 1) return false;
            if (pending.size() == 1) candidates &= pending;
        }

        Vertex order[kMaxOrder];
        int count = 0;
        for (Vertex w : candidates) {
            VertexSet visited_partners = required_[w] - unvisited - VertexSet{end, start_};
            if (!visited_partners.empty()) continue;
            order[count++] = w;
        }
        std::sort(order, order + count, [&](Vertex x, Vertex y) {
            int dx = (g_.neighbours(x) & unvisited).size();
            int dy = (g_.neighbours(y) & unvisited).size();
            return dx != dy ? dx < dy : x < y;
        });

        for (int i = 0; i < count; ++i) {
            Vertex w = order[i];
            path_.push_back(w);
            if (extend(w, unvisited.without(w), depth + 1)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    VertexSet domain_;
    HamiltonOptions options_;
    std::vector<VertexSet> required_;
    Vertex start_ = 0;
    std::vector<Vertex> path_;
};

} // namespace detail

/// A Hamiltonian cycle of g[domain] that uses every required edge, if one exists.
///
/// Backtracking from the lowest vertex of the domain. A branch is cut when a
/// remaining vertex has fewer than two usable neighbours, or when the
/// remaining vertices plus the two path ends (joined by a virtual edge) are
/// not 2-connected.
inline std::optional<Cycle> hamiltonian_cycle_in(const Graph& g, VertexSet domain, std::span<const Edge> required = {},
                                                 HamiltonOptions options = {})
{
    g.check(domain);
    for (const Edge& e : required) {
        if (!g.has_edge(e)) throw InputError("required pair is not an edge of the graph");
    }
    if (options.articulation_interval < 1) options.articulation_interval = 1;
    auto found = detail::HamiltonSearch(g, domain, required, options).run();
    if (!found) return std::nullopt;
    return Cycle(std::move(*found));
}

/// A Hamiltonian cycle of g, or nothing. Graphs of order below 3 have none.
inline std::optional<Cycle> is_hamiltonian(const Graph& g, HamiltonOptions options = {})
{
    return hamiltonian_cycle_in(g, g.vertices(), {}, options);
}

} // namespace chordext
