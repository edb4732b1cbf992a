#pragma once

#include "graph.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <string>

namespace chordext {

/// Graphviz text. Highlighted edges are drawn bold and thick, highlighted
/// vertices filled.
inline std::string export_dot(const Graph& g, std::span<const Edge> highlight_edges = {},
                              VertexSet highlight_vertices = {}, const std::string& name = "G")
{
    g.check(highlight_vertices);
    for (const Edge& e : highlight_edges) {
        if (!g.has_edge(e)) throw InputError("highlighted edge is not an edge of the graph");
    }

    auto quoted = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q.push_back('\\');
            q.push_back(c);
        }
        return q + "\"";
    };

    std::ostringstream out;
    out << "graph " << quoted(name) << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=" << quoted(g.label(v));
        if (highlight_vertices.contains(v)) out << ", style=filled, fillcolor=gray";
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (std::find(highlight_edges.begin(), highlight_edges.end(), e) != highlight_edges.end()) {
            out << " [style=bold, penwidth=4]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chordext
