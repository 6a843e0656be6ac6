#pragma once

#include <optional>

#include "minorkit/graph.hpp"

namespace mk {

struct Breaker {
    enum class Kind { None, Edge, Vertex };
    Kind kind = Kind::None;
    int u = -1, v = -1;  // edge endpoints when kind == Edge
    int x = -1;          // vertex id when kind == Vertex
    int valence = 0;     // degree of x at the time the breaker was recorded

    static Breaker none() { return {}; }
    static Breaker edge(int u, int v) {
        Breaker b;
        b.kind = Kind::Edge;
        b.u = std::min(u, v);
        b.v = std::max(u, v);
        return b;
    }
    static Breaker vertex(int x, int valence) {
        Breaker b;
        b.kind = Kind::Vertex;
        b.x = x;
        b.valence = valence;
        return b;
    }
};

// Nearly-k-long test: girth(g) >= k means no breaker is needed; otherwise
// the lexicographically first single vertex, then edge, whose removal
// restores girth >= k. Throws NotNearlyLong (with a pair of vertex-disjoint
// short cycles as certificate when one exists) if no single element works.
Breaker nearly_k_long(const Graph& g, int k);

// Non-throwing variant.
std::optional<Breaker> try_nearly_k_long(const Graph& g, int k);

// Shortest cycle as a vertex sequence (empty for forests).
std::vector<int> shortest_cycle(const Graph& g);

}  // namespace mk
