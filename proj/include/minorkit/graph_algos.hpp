#pragma once

#include <limits>
#include <optional>

#include "minorkit/graph.hpp"

namespace mk {

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

bool is_connected(const Graph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Components of g - removed (removed given as a flag vector).
std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed);

// Length of a shortest cycle; kInfiniteGirth for forests.
int girth(const Graph& g);

bool has_triangle(const Graph& g);

// True if removing `cut` leaves >= 2 components (on >= 2 surviving vertices).
bool disconnects(const Graph& g, const std::vector<int>& cut);

// Vertex connectivity. Complete graphs give n-1; disconnected graphs 0.
// Flow-based (unit vertex capacities); suited to the small kappa this
// project needs.
int vertex_connectivity(const Graph& g);

// Max number of internally disjoint paths between two distinct vertices
// (vertex-capacity max flow); adjacency makes the value n-ish large, so
// callers normally pass non-adjacent pairs. `cap` stops the augmentation
// early once the flow reaches it.
int local_connectivity(const Graph& g, int s, int t, int cap = std::numeric_limits<int>::max());

struct Disconnector {
    std::vector<int> vertices;                  // sorted
    bool trivial = false;                       // some component is a singleton
    std::vector<std::vector<int>> components_after;
};

// All inclusion-minimal vertex sets of size exactly k whose removal
// disconnects g, in lexicographic order.
std::vector<Disconnector> find_disconnectors(const Graph& g, int k);

// Same scan without the minimality filter (every size-k disconnecting set).
std::vector<Disconnector> all_disconnectors(const Graph& g, int k);

enum class ConnectivityClass { Neither, EssentiallyK, InternallyK };

// essentially-k: every (k-1)-disconnector is trivial.
// internally-k: additionally each removal leaves exactly 2 components, one
// of them a singleton. Vacuously internally-k when no (k-1)-disconnector
// exists.
ConnectivityClass connectivity_class(const Graph& g, int k);

// Theorem-grade internal 4-connectivity: 3-connected on top of the local
// predicate. The classification lemmas all assume this stronger form.
bool internally_4_connected(const Graph& g);

struct Block {
    std::vector<int> vertices;             // sorted
    std::vector<std::pair<int, int>> edges;
    bool leaf = false;
};

struct BlockTree {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;  // sorted
};

// Block-cut decomposition; throws std::invalid_argument if g is disconnected.
BlockTree blocks(const Graph& g);

// Members of `s` with a neighbor outside s.
std::vector<int> boundary(const Graph& g, const std::vector<int>& s);

}  // namespace mk
