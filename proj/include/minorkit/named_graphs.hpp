#pragma once

#include "minorkit/graph.hpp"

namespace mk {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

// C8 plus the four long chords i -- i+4.
Graph wagner_v8();

Graph petersen();

// Point-line incidence graph of PG(2,q), q in {2,3,4,5}: points 0..q^2+q,
// lines q^2+q+1..2(q^2+q+1)-1. Bipartite, (q+1)-regular, girth 6.
Graph pg_incidence(int q);

inline Graph heawood() { return pg_incidence(2); }

Graph cube_q3();
Graph octahedron();
Graph icosahedron();
Graph dodecahedron();

// Line graph of K_{3,3}: the 3x3 rook's graph.
Graph line_graph_k33();

// Hoffman-Singleton graph: 7-regular, girth 5, order 50.
Graph hoffman_singleton();

// Carbon skeleton of coronene: inner hexagon, C18 rim, spokes. Girth 6.
Graph coronene();

// Every edge replaced by a path with `times` inner vertices.
Graph subdivide_all_edges(const Graph& g, int times = 1);

// Named lookup used by the CLI ("petersen", "v8", ...); throws
// std::invalid_argument for unknown names.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_list();

}  // namespace mk
