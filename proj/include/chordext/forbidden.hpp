#pragma once

#include "chordal.hpp"
#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordext {

/// G v H: disjoint union plus every edge between the two parts. Labels of h
/// that collide with labels of g get a trailing apostrophe.
inline Graph join(const Graph& g, const Graph& h)
{
    const int n = g.order() + h.order();
    if (n > kMaxOrder) throw InputError("join exceeds the maximum order");
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
    std::vector<std::string> labels = g.labels();
    for (const auto& l : h.labels()) {
        std::string name = l;
        while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += "'";
        labels.push_back(name);
    }
    return Graph(n, edges, std::move(labels));
}

namespace detail {

class InducedMatcher {
public:
    InducedMatcher(const Graph& pattern, const Graph& host, VertexSet within)
        : pattern_(pattern), host_(host), within_(within), order_(), image_(pattern.order(), -1)
    {
        // Place the highest-degree vertex first, then always the vertex with the
        // most already-placed neighbours, so adjacency constraints bite early.
        VertexSet placed;
        for (int step = 0; step < pattern.order(); ++step) {
            Vertex best = -1;
            int best_links = -1;
            for (Vertex v : pattern.vertices() - placed) {
                int links = (pattern.neighbours(v) & placed).size();
                if (best < 0 || links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                    best = v;
                    best_links = links;
                }
            }
            order_.push_back(best);
            placed.insert(best);
        }
    }

    std::optional<VertexSet> run()
    {
        if (pattern_.order() > within_.size()) return std::nullopt;
        if (place(0, VertexSet{})) {
            VertexSet out;
            for (Vertex v : image_) out.insert(v);
            return out;
        }
        return std::nullopt;
    }

private:
    bool place(std::size_t depth, VertexSet used)
    {
        if (depth == order_.size()) return true;
        const Vertex p = order_[depth];
        VertexSet candidates = within_ - used;
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex q = order_[i];
            if (pattern_.adjacent(p, q)) {
                candidates &= host_.neighbours(image_[q]);
            } else {
                candidates -= host_.neighbours(image_[q]);
            }
        }
        const int need = pattern_.degree(p);
        for (Vertex h : candidates) {
            if ((host_.neighbours(h) & within_).size() < need) continue;
            image_[p] = h;
            if (place(depth + 1, used.with(h))) return true;
        }
        image_[p] = -1;
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    VertexSet within_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
};

} // namespace detail

/// Vertex set of host inducing a copy of pattern, if any.
inline std::optional<VertexSet> contains_induced(const Graph& pattern, const Graph& host)
{
    return detail::InducedMatcher(pattern, host, host.vertices()).run();
}

inline bool are_isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && contains_induced(a, b).has_value();
}

struct NamedPattern {
    std::string name;
    Graph graph;
    /// Family name and parameter, e.g. ("path", 5) for P5. Parameter 0 when none.
    std::string family;
    int parameter = 0;
    std::string description;
};

/// Complete k-sun: inner clique y_0..y_{k-1}, outer x_i adjacent to y_i and y_{i+1}.
inline Graph complete_sun(int k)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
        edges.emplace_back(k + i, i);
        edges.emplace_back(k + i, (i + 1) % k);
    }
    return Graph(2 * k, edges);
}

namespace detail {

inline std::optional<int> parse_int(std::string_view s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

} // namespace detail

/// Looks up a pattern by name: P<r>, C<n>, K<n>, K1,<s>, claw, K1,4+e, bull,
/// hourglass, diamond, K2vP5, W<n> (wheel K1 v C<n>), sun<k> (complete sun).
inline std::optional<NamedPattern> pattern_by_name(std::string_view name)
{
    const std::string n(name);
    auto number_after = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix)) return std::nullopt;
        return detail::parse_int(name.substr(prefix.size()));
    };

    if (name == "claw") return NamedPattern{n, make::star(3), "star", 3, "K1,3"};
    if (name == "bull") {
        return NamedPattern{n, Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}), "bull", 0,
                            "triangle 0,1,2 with pendant edges 0-3 and 1-4"};
    }
    if (name == "hourglass") {
        return NamedPattern{n, Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}), "hourglass", 0,
                            "two triangles sharing exactly vertex 0"};
    }
    if (name == "K1,4+e") {
        return NamedPattern{n, Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}), "star_plus_edge", 4,
                            "star with centre 0 and leaves 1..4, plus the leaf edge 1-2"};
    }
    if (name == "diamond") return NamedPattern{n, Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}), "diamond", 0,
                                               "K4 minus the edge 0-3"};
    if (name == "K2vP5") return NamedPattern{n, join(make::complete(2), make::path(5)), "join", 0, "K2 joined with P5"};
    if (name.starts_with("K1,")) {
        if (auto s = number_after("K1,"); s && *s >= 1 && *s < kMaxOrder) {
            return NamedPattern{n, make::star(*s), "star", *s, "centre 0, leaves 1.." + std::to_string(*s)};
        }
        return std::nullopt;
    }
    if (auto r = number_after("P"); r && *r >= 1 && *r <= kMaxOrder) {
        return NamedPattern{n, make::path(*r), "path", *r, "induced path on " + std::to_string(*r) + " vertices"};
    }
    if (auto c = number_after("C"); c && *c >= 3 && *c <= kMaxOrder) {
        return NamedPattern{n, make::cycle(*c), "cycle", *c, "chordless cycle"};
    }
    if (auto k = number_after("K"); k && *k >= 1 && *k <= kMaxOrder) {
        return NamedPattern{n, make::complete(*k), "complete", *k, "clique"};
    }
    if (auto w = number_after("W"); w && *w >= 3 && *w < kMaxOrder) {
        return NamedPattern{n, join(make::complete(1), make::cycle(*w)), "wheel", *w, "hub 0 joined to a cycle"};
    }
    if (auto k = number_after("sun"); k && *k >= 3 && 2 * *k <= kMaxOrder) {
        return NamedPattern{n, complete_sun(*k), "sun", *k, "inner clique 0..k-1, outer vertex k+i on edge i,i+1"};
    }
    return std::nullopt;
}

inline NamedPattern pattern(std::string_view name)
{
    if (auto p = pattern_by_name(name)) return *p;
    throw InputError("unknown pattern '" + std::string(name) + "'");
}

/// The patterns this library names explicitly.
inline std::vector<NamedPattern> atlas()
{
    std::vector<NamedPattern> out;
    for (auto name : {"P3", "P4", "P5", "P9", "P10", "claw", "K1,4", "K1,4+e", "K1,5", "bull", "hourglass", "diamond",
                      "K2vP5", "C4", "C5", "sun3", "sun4"}) {
        out.push_back(pattern(name));
    }
    return out;
}

/// No pattern occurs as an induced subgraph of host.
inline bool is_free(const Graph& host, std::span<const NamedPattern> patterns)
{
    for (const auto& p : patterns) {
        if (contains_induced(p.graph, host)) return false;
    }
    return true;
}

struct InducedPath {
    int length = 0;
    std::vector<Vertex> vertices;
};

/// Longest induced path (counted in vertices) with a witness sequence.
inline InducedPath longest_induced_path(const Graph& g)
{
    InducedPath best;
    if (g.order() == 0) return best;
    best = {1, {0}};
    std::vector<Vertex> path;

    // blocked: path vertices and every neighbour of a path vertex other than the end.
    auto grow = [&](auto&& self, Vertex end, VertexSet blocked) -> void {
        if (static_cast<int>(path.size()) > best.length) best = {static_cast<int>(path.size()), path};
        VertexSet candidates = g.neighbours(end) - blocked;
        if (candidates.empty()) return;
        VertexSet reachable = reach(g, end, g.vertices() - blocked).without(end);
        if (static_cast<int>(path.size()) + reachable.size() <= best.length) return;
        const VertexSet next_blocked = blocked | g.neighbours(end);
        for (Vertex w : candidates) {
            path.push_back(w);
            self(self, w, next_blocked.with(w));
            path.pop_back();
        }
    };

    for (Vertex v = 0; v < g.order(); ++v) {
        path.assign(1, v);
        grow(grow, v, VertexSet::single(v));
    }
    return best;
}

struct SunWitness {
    int k = 0;
    VertexSet vertices;
    /// y_1..y_k and x_1..x_k, with x_i adjacent to exactly y_i and y_{i+1} among them.
    std::vector<Vertex> inner;
    std::vector<Vertex> outer;
};

namespace detail {

class SunSearch {
public:
    SunSearch(const Graph& g, int k) : g_(g), k_(k) {}

    std::optional<SunWitness> run()
    {
        for (Vertex y1 = 0; y1 < g_.order(); ++y1) {
            inner_.assign(1, y1);
            outer_.clear();
            if (choose_outer(VertexSet::single(y1))) {
                return SunWitness{k_, VertexSet::from(inner_) | VertexSet::from(outer_), inner_, outer_};
            }
        }
        return std::nullopt;
    }

private:
    // inner_ has j+1 entries, outer_ has j: pick x_{j+1} next to y_{j+1}.
    bool choose_outer(VertexSet used)
    {
        const int j = static_cast<int>(outer_.size());
        const bool last = j + 1 == k_;
        VertexSet candidates = g_.neighbours(inner_[j]) - used;
        for (Vertex x : outer_) candidates -= g_.neighbours(x);
        for (int i = last ? 1 : 0; i < j; ++i) candidates -= g_.neighbours(inner_[i]);
        if (last) candidates &= g_.neighbours(inner_[0]);
        for (Vertex x : candidates) {
            outer_.push_back(x);
            bool done = last ? is_chordal(induced_subgraph(g_, used.with(x)).graph)
                             : choose_inner(used.with(x));
            if (done) return true;
            outer_.pop_back();
        }
        return false;
    }

    // Pick y_{j+2}, adjacent to x_{j+1} and to no earlier outer vertex.
    bool choose_inner(VertexSet used)
    {
        const Vertex y1 = inner_[0];
        VertexSet candidates = g_.neighbours(outer_.back()) - used - VertexSet::range(y1 + 1);
        for (std::size_t i = 0; i + 1 < outer_.size(); ++i) candidates -= g_.neighbours(outer_[i]);
        for (Vertex y : candidates) {
            inner_.push_back(y);
            if (choose_outer(used.with(y))) return true;
            inner_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<Vertex> inner_;
    std::vector<Vertex> outer_;
};

} // namespace detail

/// Smallest k >= 3 such that g has an induced k-sun, with a witness.
///
/// A k-sun is a chordal graph on X = {x_1..x_k} and Y = {y_1..y_k} where x_i
/// is adjacent only to y_i and y_{i+1} (indices mod k). Nothing further is
/// required of Y; for k = 3 chordality forces Y to be a triangle, for larger k
/// it need not be a clique.
inline std::optional<SunWitness> find_sun(const Graph& g)
{
    for (int k = 3; 2 * k <= g.order(); ++k) {
        if (auto w = detail::SunSearch(g, k).run()) return w;
    }
    return std::nullopt;
}

} // namespace chordext
