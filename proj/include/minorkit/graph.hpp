#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mk {

// Simple undirected graph over dense integer vertex ids 0..n-1.
// Neighbor lists are kept sorted; no self-loops, no parallel edges.
// Graphs are treated as immutable values once built: every operation
// below returns a new graph instead of mutating in place.
struct Graph {
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;  // optional external names, empty if unused

    Graph() = default;
    explicit Graph(int n) : adj(n) {}

    int n() const { return static_cast<int>(adj.size()); }

    bool has_vertex(int v) const { return v >= 0 && v < n(); }

    bool has_edge(int u, int v) const {
        if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    // Inserts the edge, keeping lists sorted; ignores duplicates, rejects loops.
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("add_edge: self-loop");
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("add_edge: vertex out of range");
        if (has_edge(u, v)) return;
        adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    int add_vertex() {
        adj.emplace_back();
        if (!labels.empty()) labels.emplace_back();
        return n() - 1;
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int min_degree() const {
        int d = n() == 0 ? 0 : degree(0);
        for (int v = 1; v < n(); ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    long long edge_count() const {
        long long s = 0;
        for (const auto& a : adj) s += static_cast<long long>(a.size());
        return s / 2;
    }

    // Edges as sorted (u < v) pairs, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n(); ++u)
            for (int v : adj[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool operator==(const Graph& o) const { return adj == o.adj; }
};

// Renumbering map produced by deletions and contractions: to_new[old] is the
// new id of a surviving vertex, or -1 if it was removed/merged away.
struct VertexMap {
    std::vector<int> to_new;
    int image(int old_id) const { return to_new.at(old_id); }
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& es);

// Induced subgraph on `keep` (order of `keep` defines the new ids 0..k-1).
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::pair<Graph, VertexMap> delete_vertices(const Graph& g, const std::vector<int>& drop);

Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge_copy(const Graph& g, int u, int v);

// Union of the two edge sets on max(n) vertices.
Graph graph_union(const Graph& a, const Graph& b);

struct ContractResult {
    Graph graph;
    VertexMap map;   // old -> new; every member of the contracted set maps to rep
    int rep;         // id of the merged vertex in the new graph
};

// Contracts the (connected) set `part` to a single vertex; result kept simple.
// Throws std::invalid_argument if g[part] is disconnected.
ContractResult contract_set(const Graph& g, const std::vector<int>& part);

}  // namespace mk
