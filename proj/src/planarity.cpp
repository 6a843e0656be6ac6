#include "minorkit/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <map>
#include <set>
#include <stdexcept>

#include "minorkit/graph_algos.hpp"

namespace mk {

bool PlaneEmbedding::vertex_on_face(int f, int v) const {
    const auto& walk = faces[f];
    return std::find(walk.begin(), walk.end(), v) != walk.end();
}

std::vector<int> PlaneEmbedding::faces_at(int v) const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (vertex_on_face(f, v)) out.push_back(f);
    return out;
}

bool PlaneEmbedding::cofacial(int u, int v) const {
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (vertex_on_face(f, u) && vertex_on_face(f, v)) return true;
    return false;
}

std::optional<int> PlaneEmbedding::common_face(const std::vector<int>& vs) const {
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        bool all = true;
        for (int v : vs)
            if (!vertex_on_face(f, v)) {
                all = false;
                break;
            }
        if (all) return f;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rotation) {
    // position of u within rotation[v]
    std::vector<std::map<int, int>> pos(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
            pos[v][rotation[v][i]] = i;

    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < g.n(); ++u)
        for (int v : rotation[u]) {
            if (used.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                int i = pos[b].at(a);
                int c = rotation[b][(i + 1) % rotation[b].size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(walk));
        }
    return faces;
}

PlaneEmbedding embedding_from_rotation(const Graph& g,
                                       const std::vector<std::vector<int>>& rotation,
                                       int outer) {
    // sanity: rotation must list exactly the neighbors
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> r = rotation[v];
        std::sort(r.begin(), r.end());
        if (r != g.adj[v]) throw std::logic_error("rotation does not match adjacency");
    }
    PlaneEmbedding emb;
    emb.graph = g;
    emb.rotation = rotation;
    emb.faces = trace_faces(g, rotation);

    // Euler check per component (isolated vertices contribute one implicit face)
    auto comps = components(g);
    for (const auto& comp : comps) {
        long long vc = static_cast<long long>(comp.size()), ec = 0, fc = 0;
        std::set<int> in(comp.begin(), comp.end());
        for (int v : comp) ec += g.degree(v);
        ec /= 2;
        if (ec == 0) continue;
        for (const auto& f : emb.faces)
            if (in.count(f[0])) ++fc;
        if (vc - ec + fc != 2) throw std::logic_error("rotation fails Euler's formula");
    }

    if (outer >= 0) {
        if (outer >= static_cast<int>(emb.faces.size())) throw std::logic_error("bad outer face");
        emb.outer = outer;
    } else {
        int best = -1;
        for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
            if (best == -1 || emb.faces[f].size() > emb.faces[best].size()) best = f;
        emb.outer = best;
    }
    return emb;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

PlanarityResult planarity(const Graph& g) {
    PlanarityResult res;
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    auto eindex = boost::get(boost::edge_index, bg);
    int ei = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eindex, *it, ei++);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> emb_store(g.n());
    std::vector<Edge> kur;

    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb_store.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));

    if (planar) {
        std::vector<std::vector<int>> rotation(g.n());
        for (int v = 0; v < g.n(); ++v)
            for (const Edge& e : emb_store[v]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                rotation[v].push_back(a == v ? b : a);
            }
        res.embedding = embedding_from_rotation(g, rotation);
        return res;
    }

    NonplanarWitness w;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : kur) {
        int a = static_cast<int>(boost::source(e, bg));
        int b = static_cast<int>(boost::target(e, bg));
        if (a > b) std::swap(a, b);
        if (seen.insert({a, b}).second) w.edges.push_back({a, b});
    }
    // the raw edge set may carry tails; strip edges at degree-1 vertices
    // until the genuine subdivision remains
    for (bool pruned = true; pruned;) {
        pruned = false;
        std::map<int, int> deg;
        for (auto [a, b] : w.edges) {
            ++deg[a];
            ++deg[b];
        }
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : w.edges) {
            if (deg[a] == 1 || deg[b] == 1)
                pruned = true;
            else
                kept.push_back({a, b});
        }
        w.edges = std::move(kept);
    }
    if (validate_subdivision_witness(g, w.edges, true, &w.branch_vertices))
        w.is_k5 = true;
    else if (validate_subdivision_witness(g, w.edges, false, &w.branch_vertices))
        w.is_k5 = false;
    else
        throw std::logic_error("planarity: witness is not a Kuratowski subdivision");
    res.witness = std::move(w);
    return res;
}

bool is_planar(const Graph& g) {
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool validate_subdivision_witness(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                                  bool want_k5, std::vector<int>* branch_out) {
    // the witness must be a subgraph of g
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) return false;

    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> branch;
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2) {
            if (want_k5 ? nb.size() != 4 : nb.size() != 3) return false;
            branch.push_back(v);
        }
    }
    size_t want_branch = want_k5 ? 5 : 6;
    if (branch.size() != want_branch) return false;
    std::set<int> branch_set(branch.begin(), branch.end());

    // walk the subdivided edges
    std::map<int, int> bid;
    for (size_t i = 0; i < branch.size(); ++i) bid[branch[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> connections;
    std::set<std::pair<int, int>> walked;
    size_t interior_visits = 0;
    for (int b : branch)
        for (int first : adj[b]) {
            if (walked.count({b, first})) continue;
            int prev = b, cur = first;
            walked.insert({prev, cur});
            while (!branch_set.count(cur)) {
                ++interior_visits;
                const auto& nb = adj[cur];
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
                walked.insert({prev, cur});
            }
            walked.insert({cur, prev});
            int x = bid[b], y = bid[cur];
            if (x == y) return false;  // path back to the same branch vertex
            if (x > y) std::swap(x, y);
            if (!connections.insert({x, y}).second) return false;  // parallel path
        }
    // every interior vertex visited exactly once
    if (interior_visits != adj.size() - branch.size()) return false;

    size_t want_edges = want_k5 ? 10 : 9;
    if (connections.size() != want_edges) return false;
    if (!want_k5) {
        // must be bipartite 3+3: check via 2-coloring of the connection graph
        std::vector<int> color(6, -1);
        std::vector<int> stack{0};
        color[0] = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [a, b] : connections) {
                int other = a == u ? b : (b == u ? a : -1);
                if (other == -1) continue;
                if (color[other] == -1) {
                    color[other] = 1 - color[u];
                    stack.push_back(other);
                } else if (color[other] == color[u]) {
                    return false;
                }
            }
        }
    }
    if (branch_out) *branch_out = branch;
    return true;
}

}  // namespace mk
