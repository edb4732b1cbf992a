#pragma once

#include "graph.hpp"

namespace chordext {

/// Vertices lying on at least one triangle.
inline VertexSet triangle_membership(const Graph& g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbours(v);
        for (Vertex w : nb) {
            if (g.neighbours(w).intersects(nb)) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

} // namespace chordext
