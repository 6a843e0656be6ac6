#pragma once

#include <optional>

#include "minorkit/graph.hpp"

namespace mk {

// Combinatorial embedding: rotation system plus the traced face walks.
// Faces are closed walks stored as vertex sequences; |f| counts darts, so a
// bridge contributes twice to its face length. `outer` indexes X_G.
struct PlaneEmbedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces;
    int outer = -1;

    int face_length(int f) const { return static_cast<int>(faces[f].size()); }
    bool vertex_on_face(int f, int v) const;
    // faces incident with v, in rotation order (with multiplicity)
    std::vector<int> faces_at(int v) const;
    bool cofacial(int u, int v) const;
    std::optional<int> common_face(const std::vector<int>& vs) const;
};

struct NonplanarWitness {
    std::vector<std::pair<int, int>> edges;  // subdivision of K5 or K3,3 in the host
    bool is_k5 = false;
    std::vector<int> branch_vertices;
};

struct PlanarityResult {
    std::optional<PlaneEmbedding> embedding;
    std::optional<NonplanarWitness> witness;
    bool planar() const { return embedding.has_value(); }
};

// Embedding-or-witness. Embeddings are validated by face tracing + Euler's
// formula per component; witnesses by the subdivision checker below.
PlanarityResult planarity(const Graph& g);

bool is_planar(const Graph& g);

// Face walks traced from a rotation system.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rotation);

// Builds the face list from a rotation system and checks Euler's formula
// (throws std::logic_error when the rotation is not planar-consistent).
// The outer face defaults to a maximum-length face, smallest index first.
PlaneEmbedding embedding_from_rotation(const Graph& g,
                                       const std::vector<std::vector<int>>& rotation,
                                       int outer = -1);

// True iff `edges` span a subdivision of K5 (want_k5) or K3,3 within g;
// fills branch vertices when it checks out.
bool validate_subdivision_witness(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                                  bool want_k5, std::vector<int>* branch_out = nullptr);

}  // namespace mk
