#include "minorkit/graph_algos.hpp"

#include <functional>
#include <queue>

namespace mk {

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return static_cast<int>(components(g)[0].size()) == g.n();
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int w : g.adj[u])
                if (comp[w] == -1) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed) {
    std::vector<char> gone(g.n(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (gone[s] || comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int w : g.adj[u])
                if (!gone[w] && comp[w] == -1) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

int girth(const Graph& g) {
    // BFS from every root; a cross/back edge at depths d(u), d(w) closes a
    // cycle of length d(u)+d(w)+1. Exact over all roots.
    int best = kInfiniteGirth;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(r);
        dist[r] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            for (int w : g.adj[v])
                if (w > v && g.has_edge(u, w)) return true;
        }
    return false;
}

bool disconnects(const Graph& g, const std::vector<int>& cut) {
    std::vector<char> gone(g.n(), 0);
    for (int v : cut) gone[v] = 1;
    int first = -1, alive = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) {
            ++alive;
            if (first == -1) first = v;
        }
    if (alive < 2) return false;
    std::queue<int> q;
    std::vector<char> seen(g.n(), 0);
    q.push(first);
    seen[first] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (!gone[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached < alive;
}

int local_connectivity(const Graph& g, int s, int t, int cap) {
    // Unit vertex capacities via the usual split: v_in -> v_out. BFS
    // augmentation; each round adds one path.
    int n = g.n();
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    // residual adjacency as capacity map on 2n nodes
    std::vector<std::vector<std::pair<int, int>>> arcs(2 * n);  // (to, arc-id)
    std::vector<int> capv;
    auto add_arc = [&](int a, int b, int c) {
        arcs[a].push_back({b, static_cast<int>(capv.size())});
        capv.push_back(c);
        arcs[b].push_back({a, static_cast<int>(capv.size())});
        capv.push_back(0);
    };
    for (int v = 0; v < n; ++v) add_arc(vin(v), vout(v), (v == s || v == t) ? 1 << 20 : 1);
    for (int u = 0; u < n; ++u)
        for (int w : g.adj[u]) add_arc(vout(u), vin(w), 1 << 20);

    int flow = 0;
    std::vector<int> pre_arc(2 * n), pre_node(2 * n);
    while (flow < cap) {
        std::fill(pre_node.begin(), pre_node.end(), -1);
        std::queue<int> q;
        q.push(vout(s));
        pre_node[vout(s)] = vout(s);
        while (!q.empty() && pre_node[vin(t)] == -1) {
            int u = q.front();
            q.pop();
            for (auto [b, id] : arcs[u])
                if (capv[id] > 0 && pre_node[b] == -1) {
                    pre_node[b] = u;
                    pre_arc[b] = id;
                    q.push(b);
                }
        }
        if (pre_node[vin(t)] == -1) break;
        for (int v = vin(t); v != vout(s); v = pre_node[v]) {
            capv[pre_arc[v]] -= 1;
            capv[pre_arc[v] ^ 1] += 1;
        }
        ++flow;
    }
    return flow;
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    long long m = g.edge_count();
    if (m == static_cast<long long>(n) * (n - 1) / 2) return n - 1;  // complete

    int best = g.min_degree();
    // A minimum cut D misses some vertex among the first delta+1; pairing
    // that vertex with every non-neighbor covers D (Even-Tarjan style sweep).
    int probes = std::min(n, best + 1);
    for (int s = 0; s < probes; ++s) {
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, local_connectivity(g, s, t, best));
            if (best == 0) return 0;
        }
    }
    return best;
}

namespace {

void classify(const Graph& g, Disconnector& d) {
    d.components_after = components_after_removal(g, d.vertices);
    d.trivial = false;
    for (const auto& c : d.components_after)
        if (c.size() == 1) d.trivial = true;
}

void subsets_of_size(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> pick(k);
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == k) return visit(pick);
        for (int v = start; v <= n - (k - depth); ++v) {
            pick[depth] = v;
            if (!rec(v + 1, depth + 1)) return false;
        }
        return true;
    };
    if (k >= 0 && k <= n) rec(0, 0);
}

}  // namespace

std::vector<Disconnector> all_disconnectors(const Graph& g, int k) {
    std::vector<Disconnector> out;
    subsets_of_size(g.n(), k, [&](const std::vector<int>& pick) {
        if (disconnects(g, pick)) {
            Disconnector d;
            d.vertices = pick;
            classify(g, d);
            out.push_back(std::move(d));
        }
        return true;
    });
    return out;
}

std::vector<Disconnector> find_disconnectors(const Graph& g, int k) {
    std::vector<Disconnector> out;
    for (auto& d : all_disconnectors(g, k)) {
        bool minimal = true;
        // check all proper nonempty subsets
        int kk = static_cast<int>(d.vertices.size());
        for (int mask = 1; minimal && mask < (1 << kk) - 1; ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < kk; ++i)
                if (mask & (1 << i)) sub.push_back(d.vertices[i]);
            if (disconnects(g, sub)) minimal = false;
        }
        if (minimal) out.push_back(std::move(d));
    }
    return out;
}

ConnectivityClass connectivity_class(const Graph& g, int k) {
    bool essentially = true, internally = true;
    subsets_of_size(g.n(), k - 1, [&](const std::vector<int>& pick) {
        if (!disconnects(g, pick)) return true;
        auto comps = components_after_removal(g, pick);
        bool has_singleton = false;
        for (const auto& c : comps)
            if (c.size() == 1) has_singleton = true;
        if (!has_singleton) {
            essentially = internally = false;
            return false;
        }
        if (comps.size() != 2) internally = false;
        return true;
    });
    if (!essentially) return ConnectivityClass::Neither;
    return internally ? ConnectivityClass::InternallyK : ConnectivityClass::EssentiallyK;
}

bool internally_4_connected(const Graph& g) {
    return vertex_connectivity(g) >= 3 &&
           connectivity_class(g, 4) == ConnectivityClass::InternallyK;
}

BlockTree blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph disconnected");
    BlockTree bt;
    if (g.n() == 0) return bt;
    if (g.n() == 1) {
        bt.blocks.push_back({{0}, {}, true});
        return bt;
    }
    std::vector<int> num(g.n(), -1), low(g.n(), 0);
    std::vector<char> is_cut(g.n(), 0);
    std::vector<std::pair<int, int>> stk;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        num[u] = low[u] = timer++;
        int children = 0;
        for (int w : g.adj[u]) {
            if (w == parent) {
                parent = -2;  // skip one multiplicity of the parent edge
                continue;
            }
            if (num[w] == -1) {
                ++children;
                stk.push_back({u, w});
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if ((num[u] == 0 && children > 1) || (num[u] != 0 && low[w] >= num[u])) is_cut[u] = 1;
                if (low[w] >= num[u]) {
                    Block b;
                    while (true) {
                        auto e = stk.back();
                        stk.pop_back();
                        b.edges.push_back(e);
                        if (e == std::make_pair(u, w)) break;
                    }
                    std::vector<int> vs;
                    for (auto [a, c] : b.edges) {
                        vs.push_back(a);
                        vs.push_back(c);
                    }
                    std::sort(vs.begin(), vs.end());
                    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                    b.vertices = std::move(vs);
                    bt.blocks.push_back(std::move(b));
                }
            } else if (num[w] < num[u]) {
                stk.push_back({u, w});
                low[u] = std::min(low[u], num[w]);
            }
        }
    };
    dfs(0, -1);

    for (int v = 0; v < g.n(); ++v)
        if (is_cut[v]) bt.cut_vertices.push_back(v);
    for (auto& b : bt.blocks) {
        int cuts = 0;
        for (int v : b.vertices)
            if (is_cut[v]) ++cuts;
        b.leaf = cuts <= 1;
    }
    return bt;
}

std::vector<int> boundary(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> out;
    for (int v : s) {
        for (int w : g.adj[v])
            if (!in[w]) {
                out.push_back(v);
                break;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mk
