#pragma once

#include <optional>

#include "minorkit/graph.hpp"
#include "minorkit/graph_algos.hpp"

namespace mk {

// A k-hammock: connected induced subgraph identified by its vertex set,
// with boundary = members having a neighbor outside the set.
struct Hammock {
    std::vector<int> vertices;  // sorted
    std::vector<int> bnd;       // sorted, subset of vertices

    int k() const { return static_cast<int>(bnd.size()); }
    int order() const { return static_cast<int>(vertices.size()); }
    bool trivial() const { return order() == k(); }
    bool degenerate() const { return order() == k() + 1; }
    bool fat() const { return order() >= k() + 2; }
    std::vector<int> interior() const;
};

// Builds the hammock for a connected vertex set; throws std::invalid_argument
// if host[vs] is disconnected.
Hammock make_hammock(const Graph& host, std::vector<int> vs);

// All fat k-hammocks of `host` whose vertex set is contained in `within`
// (boundaries taken in host), in (size, lex) order, duplicates removed.
std::vector<std::vector<int>> fat_hammocks_within(const Graph& host,
                                                  const std::vector<int>& within, int k);

// Proper fat k-hammocks strictly inside `s`.
std::vector<std::vector<int>> proper_fat_sub_hammocks(const Graph& host,
                                                      const std::vector<int>& s, int k);

bool is_minimal_fat_hammock(const Graph& host, const std::vector<int>& s, int k);

// Replaces the set by its lexicographically least proper fat k-hammock until
// none remains.
std::vector<int> descend_to_minimal(const Graph& host, std::vector<int> s, int k);

// Minimal fat k-hammock search with the avoidance constraints the
// truncation descent needs: the result never contains avoid_vertex, and if
// both ends of avoid_edge lie in it they lie on its boundary. Scans the
// nontrivial-disconnector sides first, then the full (size, lex) stream of
// fat hammocks; nullopt when no conforming minimal fat hammock exists.
std::optional<Hammock> find_minimal_fat_within(const Graph& host, const std::vector<int>& within,
                                               int k,
                                               std::optional<std::pair<int, int>> avoid_edge,
                                               std::optional<int> avoid_vertex);

// Spec-facing operation: requires kappa(g) == k with a nontrivial
// k-disconnector and min degree >= 3; throws NoFatHammock when every
// k-disconnector is trivial. When `avoid` is set the result satisfies the
// boundary-span condition for that edge.
Hammock minimal_fat_hammock(const Graph& g, int k,
                            std::optional<std::pair<int, int>> avoid = std::nullopt);

// Two minimal fat k-hammocks with disjoint interiors (both sides of the
// first nontrivial k-disconnector).
std::pair<Hammock, Hammock> two_disjoint_minimal_fat(const Graph& g, int k);

struct Capping {
    Graph graph;                 // the hammock graph plus the window edge
    std::array<int, 2> window;   // new ids of the boundary pair
    bool virtual_edge = false;   // true when the window edge was added
    VertexMap map;               // host id -> capping id
    std::vector<int> host_vertices;  // the hammock's vertex set in host ids
};

// Capping of a fat 2-hammock.
Capping cap(const Graph& host, const Hammock& h);

struct Augmentation {
    Graph graph;   // hammock graph plus one apex joined to the boundary
    VertexMap map; // host id -> new id
    int apex = -1;
};

Augmentation augment(const Graph& host, const Hammock& h);

// Extreme 3-connected components of a graph with kappa == 2, min degree
// >= 3: cappings of minimal fat 2-hammocks with pairwise disjoint
// interiors, each 3-connected. Computed by recursive splitting along
// 2-cuts, checked against the hammock definitions.
std::vector<Capping> extreme_3_components(const Graph& g);

// Engine without the degree precondition (a single low-degree vertex is
// tolerated); used by the truncation construction on leaf blocks.
std::vector<Capping> extreme_3_components_engine(const Graph& g);

}  // namespace mk
