#include "minorkit/graph.hpp"

#include <queue>

namespace mk {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    VertexMap m;
    m.to_new.assign(g.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (!g.has_vertex(keep[i])) throw std::invalid_argument("induced_subgraph: bad vertex");
        if (m.to_new[keep[i]] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        m.to_new[keep[i]] = i;
    }
    Graph h(static_cast<int>(keep.size()));
    for (int u : keep)
        for (int v : g.adj[u])
            if (u < v && m.to_new[v] != -1) h.add_edge(m.to_new[u], m.to_new[v]);
    if (!g.labels.empty()) {
        h.labels.resize(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) h.labels[i] = g.labels[keep[i]];
    }
    return {std::move(h), std::move(m)};
}

std::pair<Graph, VertexMap> delete_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> gone(g.n(), 0);
    for (int v : drop) {
        if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertices: bad vertex");
        gone[v] = 1;
    }
    std::vector<int> keep;
    keep.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
    Graph h = g;
    auto& au = h.adj[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = h.adj[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    return h;
}

Graph add_edge_copy(const Graph& g, int u, int v) {
    Graph h = g;
    h.add_edge(u, v);
    return h;
}

Graph graph_union(const Graph& a, const Graph& b) {
    Graph g(std::max(a.n(), b.n()));
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u, v);
    return g;
}

namespace {
bool set_connected_in(const Graph& g, const std::vector<int>& part) {
    if (part.empty()) return false;
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : part) in[v] = 1;
    std::queue<int> q;
    q.push(part[0]);
    seen[part[0]] = 1;
    int reached = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++reached;
        for (int w : g.adj[u])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return reached == static_cast<int>(part.size());
}
}  // namespace

ContractResult contract_set(const Graph& g, const std::vector<int>& part) {
    if (part.empty()) throw std::invalid_argument("contract_set: empty set");
    for (int v : part)
        if (!g.has_vertex(v)) throw std::invalid_argument("contract_set: bad vertex");
    if (!set_connected_in(g, part)) throw std::invalid_argument("contract_set: set not connected");

    std::vector<char> in(g.n(), 0);
    for (int v : part) in[v] = 1;

    ContractResult r;
    r.map.to_new.assign(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!in[v]) r.map.to_new[v] = next++;
    r.rep = next;
    for (int v : part) r.map.to_new[v] = r.rep;

    r.graph = Graph(next + 1);
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u]) {
            if (u >= v) continue;
            int a = r.map.to_new[u], b = r.map.to_new[v];
            if (a == b) continue;  // inside the contracted set; multi-edges merge
            r.graph.add_edge(a, b);
        }
    return r;
}

}  // namespace mk
