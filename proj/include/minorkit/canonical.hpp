#pragma once

#include <optional>
#include <string>

#include "minorkit/graph.hpp"

namespace mk {

struct CanonResult {
    std::string form;            // packed order + canonical adjacency bits
    std::vector<int> vertex_of;  // canonical position -> original vertex id
};

// Canonical form via color refinement plus backtracking over the first
// non-singleton cell. Adequate for the desk-scale orders used here; dense
// highly regular graphs fall back to wider branching.
CanonResult canonical_labeling(const Graph& g);

inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b);

// Mapping m with m[va] = vb when isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace mk
