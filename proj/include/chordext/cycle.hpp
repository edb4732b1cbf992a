#pragma once

#include "graph.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace chordext {

/// Cyclic sequence of at least three distinct vertices.
///
/// Adjacency is checked against a host on demand (is_cycle_of / check), so
/// a Cycle can be carried between a graph and its subgraphs or mutations.
class Cycle {
public:
    explicit Cycle(std::vector<Vertex> sequence) : seq_(std::move(sequence))
    {
        if (seq_.size() < 3) throw InputError("a cycle needs at least three vertices");
        VertexSet seen;
        for (Vertex v : seq_) {
            if (v < 0 || v >= kMaxOrder) throw InputError("cycle vertex out of range");
            if (seen.contains(v)) throw InputError("cycle repeats vertex " + std::to_string(v));
            seen.insert(v);
        }
    }

    static Cycle from_labels(const Graph& g, std::initializer_list<std::string_view> names)
    {
        std::vector<Vertex> seq;
        for (auto name : names) seq.push_back(g[name]);
        return Cycle(std::move(seq));
    }

    const std::vector<Vertex>& vertices() const { return seq_; }
    int length() const { return static_cast<int>(seq_.size()); }
    Vertex operator[](int i) const { return seq_[static_cast<std::size_t>(i)]; }

    VertexSet vertex_set() const { return VertexSet::from(seq_); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < seq_.size(); ++i) out.emplace_back(seq_[i], seq_[(i + 1) % seq_.size()]);
        return out;
    }

    bool contains_edge(Edge e) const
    {
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (Edge(seq_[i], seq_[(i + 1) % seq_.size()]) == e) return true;
        }
        return false;
    }

    /// Position of v in the sequence, or -1.
    int position(Vertex v) const
    {
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (seq_[i] == v) return static_cast<int>(i);
        }
        return -1;
    }

    bool is_cycle_of(const Graph& g) const
    {
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (!g.valid(seq_[i]) || !g.has_edge(Edge(seq_[i], seq_[(i + 1) % seq_.size()]))) return false;
        }
        return true;
    }

    void check(const Graph& g) const
    {
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            Vertex u = seq_[i];
            Vertex v = seq_[(i + 1) % seq_.size()];
            if (!g.valid(u)) throw InputError("cycle vertex " + std::to_string(u) + " not in graph");
            if (!g.adjacent(u, v)) {
                throw InputError("cycle step " + g.label(u) + "-" + (g.valid(v) ? g.label(v) : std::to_string(v)) +
                                 " is not an edge");
            }
        }
    }

    bool is_hamiltonian_in(const Graph& g) const { return length() == g.order() && is_cycle_of(g); }

    std::string to_string(const Graph& g) const
    {
        std::string out;
        for (Vertex v : seq_) {
            if (!out.empty()) out += ",";
            out += g.valid(v) ? g.label(v) : std::to_string(v);
        }
        return out;
    }

    bool operator==(const Cycle&) const = default;

private:
    std::vector<Vertex> seq_;
};

/// Renders a vertex set as "{a,b,c}" using g's labels.
inline std::string format_set(const Graph& g, VertexSet s)
{
    std::string out = "{";
    for (Vertex v : s) {
        if (out.size() > 1) out += ",";
        out += g.label(v);
    }
    return out + "}";
}

} // namespace chordext
