#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "minorkit/graph.hpp"
#include "minorkit/graph_algos.hpp"

namespace mk::testutil {

// Deterministic bounded integer draw (distribution classes are not
// guaranteed stable across standard libraries).
inline int draw(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// Shortest-cycle oracle: BFS per root, recomputed independently of girth().
inline int girth_oracle(const Graph& g) {
    int best = kInfiniteGirth;
    for (int r = 0; r < g.n(); ++r) {
        std::vector<int> dist(g.n(), -1), par(g.n(), -1);
        std::vector<int> order{r};
        dist[r] = 0;
        for (size_t qi = 0; qi < order.size(); ++qi) {
            int u = order[qi];
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    order.push_back(w);
                } else if (par[u] != w && dist[w] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

// Exhaustive kappa: smallest k such that some k-subset disconnects; n-1 for
// complete graphs, 0 for disconnected input.
inline int connectivity_oracle(const Graph& g) {
    if (g.n() <= 1) return 0;
    if (!is_connected(g)) return 0;
    for (int k = 0; k <= g.n() - 2; ++k) {
        std::vector<int> pick(k);
        std::function<bool(int, int)> any = [&](int start, int depth) -> bool {
            if (depth == k) return disconnects(g, pick);
            for (int v = start; v <= g.n() - (k - depth); ++v) {
                pick[depth] = v;
                if (any(v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (any(0, 0)) return k;
    }
    return g.n() - 1;
}

// All connected vertex subsets of g (as sorted vectors); exponential, for
// small oracles only.
inline std::vector<std::vector<int>> connected_subsets(const Graph& g) {
    std::vector<std::vector<int>> out;
    int n = g.n();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        // connectivity within the mask
        std::vector<int> stack{vs[0]};
        std::set<int> seen{vs[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if ((mask >> w) & 1)
                    if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() == vs.size()) out.push_back(vs);
    }
    return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() % 1000000) / 1000000.0 < p) g.add_edge(u, v);
    return g;
}

}  // namespace mk::testutil
