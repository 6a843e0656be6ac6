#include "minorkit/hammock.hpp"

#include <functional>
#include <set>

#include "minorkit/errors.hpp"

namespace mk {

std::vector<int> Hammock::interior() const {
    std::vector<int> out;
    std::set_difference(vertices.begin(), vertices.end(), bnd.begin(), bnd.end(),
                        std::back_inserter(out));
    return out;
}

namespace {

bool set_connected(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : vs) in[v] = 1;
    std::vector<int> stack{vs[0]};
    seen[vs[0]] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++cnt;
        for (int w : g.adj[u])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return cnt == vs.size();
}

void k_subsets(const std::vector<int>& pool, int k,
               const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            visit(pick);
            return;
        }
        for (int i = start; i <= static_cast<int>(pool.size()) - (k - depth); ++i) {
            pick[depth] = pool[i];
            rec(i + 1, depth + 1);
        }
    };
    if (k >= 0 && k <= static_cast<int>(pool.size())) rec(0, 0);
}

}  // namespace

Hammock make_hammock(const Graph& host, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (!set_connected(host, vs)) throw std::invalid_argument("make_hammock: set not connected");
    Hammock h;
    h.bnd = boundary(host, vs);
    h.vertices = std::move(vs);
    return h;
}

std::vector<std::vector<int>> fat_hammocks_within(const Graph& host,
                                                  const std::vector<int>& within, int k) {
    std::vector<char> in_within(host.n(), 0);
    for (int v : within) in_within[v] = 1;
    std::set<std::vector<int>> out;

    k_subsets(within, k, [&](const std::vector<int>& bnd) {
        auto comps = components_after_removal(host, bnd);
        std::vector<std::vector<int>> eligible;
        for (auto& c : comps) {
            bool ok = true;
            for (int v : c)
                if (!in_within[v]) {
                    ok = false;
                    break;
                }
            if (ok) eligible.push_back(c);
        }
        int cc = static_cast<int>(eligible.size());
        if (cc == 0 || cc > 20) {
            if (cc > 20)
                throw InternalAssertionFailed("fat_hammocks_within: component blowup", "");
            return;
        }
        std::vector<char> in_s(host.n(), 0);
        for (unsigned mask = 1; mask < (1u << cc); ++mask) {
            std::vector<int> s(bnd);
            for (int i = 0; i < cc; ++i)
                if (mask & (1u << i)) s.insert(s.end(), eligible[i].begin(), eligible[i].end());
            if (static_cast<int>(s.size()) < k + 2) continue;
            std::sort(s.begin(), s.end());
            for (int v : s) in_s[v] = 1;
            // boundary exactness: every bnd vertex keeps an outside neighbor
            bool exact = true;
            for (int b : bnd) {
                bool outside = false;
                for (int w : host.adj[b])
                    if (!in_s[w]) {
                        outside = true;
                        break;
                    }
                if (!outside) {
                    exact = false;
                    break;
                }
            }
            if (exact && set_connected(host, s)) out.insert(s);
            for (int v : s) in_s[v] = 0;
        }
    });

    std::vector<std::vector<int>> res(out.begin(), out.end());
    std::stable_sort(res.begin(), res.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return res;
}

std::vector<std::vector<int>> proper_fat_sub_hammocks(const Graph& host,
                                                      const std::vector<int>& s, int k) {
    auto all = fat_hammocks_within(host, s, k);
    std::vector<std::vector<int>> out;
    for (auto& cand : all)
        if (cand != s) out.push_back(std::move(cand));
    return out;
}

bool is_minimal_fat_hammock(const Graph& host, const std::vector<int>& s, int k) {
    Hammock h = make_hammock(host, s);
    if (h.k() != k || !h.fat()) return false;
    return proper_fat_sub_hammocks(host, s, k).empty();
}

std::vector<int> descend_to_minimal(const Graph& host, std::vector<int> s, int k) {
    while (true) {
        auto subs = proper_fat_sub_hammocks(host, s, k);
        if (subs.empty()) return s;
        // lexicographically least vertex set among the proper fat hammocks
        const std::vector<int>* best = &subs[0];
        for (const auto& c : subs)
            if (c < *best) best = &c;
        s = *best;
    }
}

namespace {

// The boundary-span condition from the breaker-avoiding hammock search:
// if both ends of `e` lie in s, they must both lie on the boundary.
bool edge_condition_holds(const Graph& host, const std::vector<int>& s,
                          std::optional<std::pair<int, int>> e) {
    if (!e) return true;
    auto [a, b] = *e;
    bool ain = std::binary_search(s.begin(), s.end(), a);
    bool bin = std::binary_search(s.begin(), s.end(), b);
    if (!ain || !bin) return true;
    auto bnd = boundary(host, s);
    return std::binary_search(bnd.begin(), bnd.end(), a) &&
           std::binary_search(bnd.begin(), bnd.end(), b);
}

bool contains_vertex(const std::vector<int>& s, std::optional<int> v) {
    return v && std::binary_search(s.begin(), s.end(), *v);
}

}  // namespace

std::optional<Hammock> find_minimal_fat_within(const Graph& host, const std::vector<int>& within,
                                               int k,
                                               std::optional<std::pair<int, int>> avoid_edge,
                                               std::optional<int> avoid_vertex) {
    std::set<std::vector<int>> rejected;

    auto consider = [&](const std::vector<int>& start) -> std::optional<Hammock> {
        auto m = descend_to_minimal(host, start, k);
        if (rejected.count(m)) return std::nullopt;
        if (contains_vertex(m, avoid_vertex) || !edge_condition_holds(host, m, avoid_edge)) {
            rejected.insert(m);
            return std::nullopt;
        }
        return make_hammock(host, m);
    };

    // fast path: descend the sides of nontrivial k-disconnectors inside `within`
    std::vector<char> in_within(host.n(), 0);
    for (int v : within) in_within[v] = 1;
    for (const auto& d : all_disconnectors(host, k)) {
        bool inside = true;
        for (int v : d.vertices)
            if (!in_within[v]) inside = false;
        if (!inside || d.trivial) continue;
        for (const auto& c : d.components_after) {
            if (c.size() < 2) continue;
            bool cin = true;
            for (int v : c)
                if (!in_within[v]) cin = false;
            if (!cin) continue;
            std::vector<int> s(d.vertices);
            s.insert(s.end(), c.begin(), c.end());
            std::sort(s.begin(), s.end());
            if (contains_vertex(s, avoid_vertex)) continue;
            auto bnd = boundary(host, s);
            if (static_cast<int>(bnd.size()) != k) continue;
            if (auto h = consider(s)) return h;
        }
    }

    // complete stream: every minimal fat k-hammock occurs among the fat
    // hammocks and descends to itself
    std::vector<int> pool;
    for (int v : within)
        if (!avoid_vertex || v != *avoid_vertex) pool.push_back(v);
    for (const auto& s : fat_hammocks_within(host, pool, k))
        if (auto h = consider(s)) return h;
    return std::nullopt;
}

namespace {

void check_fat1_preconditions(const Graph& g, int k) {
    int kappa = vertex_connectivity(g);
    if (kappa != k)
        throw HypothesisViolation("minimal fat hammock: k differs from vertex connectivity");
    if (g.min_degree() < 3) throw HypothesisViolation("minimal fat hammock: min degree < 3");
}

std::optional<Disconnector> first_nontrivial(const Graph& g, int k) {
    for (auto& d : all_disconnectors(g, k))
        if (!d.trivial) return d;
    return std::nullopt;
}

}  // namespace

Hammock minimal_fat_hammock(const Graph& g, int k, std::optional<std::pair<int, int>> avoid) {
    check_fat1_preconditions(g, k);
    if (!first_nontrivial(g, k)) throw NoFatHammock();
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    auto h = find_minimal_fat_within(g, all, k, avoid, std::nullopt);
    if (!h) throw NoFatHammock();
    return *h;
}

std::pair<Hammock, Hammock> two_disjoint_minimal_fat(const Graph& g, int k) {
    check_fat1_preconditions(g, k);
    auto d = first_nontrivial(g, k);
    if (!d) throw NoFatHammock();
    std::vector<std::vector<int>> minima;
    for (const auto& c : d->components_after) {
        std::vector<int> s(d->vertices);
        s.insert(s.end(), c.begin(), c.end());
        std::sort(s.begin(), s.end());
        minima.push_back(descend_to_minimal(g, s, k));
        if (minima.size() == 2) break;
    }
    if (minima.size() < 2)
        throw InternalAssertionFailed("two_disjoint_minimal_fat: disconnector with one component",
                                      "");
    if (minima[1] < minima[0]) std::swap(minima[0], minima[1]);
    return {make_hammock(g, minima[0]), make_hammock(g, minima[1])};
}

Capping cap(const Graph& host, const Hammock& h) {
    if (h.k() != 2) throw HypothesisViolation("cap: hammock is not a 2-hammock");
    if (!h.fat()) throw HypothesisViolation("cap: hammock is not fat");
    Capping c;
    auto [sub, map] = induced_subgraph(host, h.vertices);
    c.map = std::move(map);
    c.window = {c.map.image(h.bnd[0]), c.map.image(h.bnd[1])};
    c.virtual_edge = !sub.has_edge(c.window[0], c.window[1]);
    if (c.virtual_edge) sub.add_edge(c.window[0], c.window[1]);
    c.graph = std::move(sub);
    c.host_vertices = h.vertices;
    return c;
}

Augmentation augment(const Graph& host, const Hammock& h) {
    Augmentation a;
    auto [sub, map] = induced_subgraph(host, h.vertices);
    a.map = std::move(map);
    a.apex = sub.add_vertex();
    for (int b : h.bnd) sub.add_edge(a.map.image(b), a.apex);
    a.graph = std::move(sub);
    return a;
}

std::vector<Capping> extreme_3_components_engine(const Graph& g) {
    if (vertex_connectivity(g) != 2)
        throw HypothesisViolation("extreme components: vertex connectivity is not 2");

    // recursive splitting along 2-cuts, pieces as (vertex set, cap edges)
    std::set<std::vector<int>> leaves;
    struct Piece {
        std::vector<int> verts;
        std::set<std::pair<int, int>> caps;  // in host ids
    };
    std::vector<Piece> stack;
    {
        Piece whole;
        whole.verts.resize(g.n());
        for (int v = 0; v < g.n(); ++v) whole.verts[v] = v;
        stack.push_back(std::move(whole));
    }
    while (!stack.empty()) {
        Piece p = std::move(stack.back());
        stack.pop_back();
        auto [sub, map] = induced_subgraph(g, p.verts);
        for (auto [u, v] : p.caps) sub.add_edge(map.image(u), map.image(v));
        if (sub.n() <= 3 || vertex_connectivity(sub) >= 3) {
            if (sub.n() >= 4) leaves.insert(p.verts);
            continue;
        }
        auto cut2 = all_disconnectors(sub, 2);
        if (cut2.empty()) continue;  // kappa <= 1 piece: never an extreme component
        const auto& d = cut2.front();
        int cu = p.verts[d.vertices[0]], cv = p.verts[d.vertices[1]];
        for (const auto& c : d.components_after) {
            Piece child;
            for (int v : c) child.verts.push_back(p.verts[v]);
            child.verts.push_back(cu);
            child.verts.push_back(cv);
            std::sort(child.verts.begin(), child.verts.end());
            std::vector<char> in_child(g.n(), 0);
            for (int v : child.verts) in_child[v] = 1;
            for (auto [a, b] : p.caps)
                if (in_child[a] && in_child[b]) child.caps.insert({a, b});
            child.caps.insert({std::min(cu, cv), std::max(cu, cv)});
            stack.push_back(std::move(child));
        }
    }

    // keep leaves that really are minimal fat 2-hammocks of g
    std::vector<std::vector<int>> good;
    for (const auto& s : leaves) {
        auto bnd = boundary(g, s);
        if (bnd.size() != 2) continue;
        if (!set_connected(g, s)) continue;
        if (is_minimal_fat_hammock(g, s, 2)) good.push_back(s);
    }
    if (good.empty()) {
        // fall back to the definitional enumeration
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        for (const auto& s : fat_hammocks_within(g, all, 2))
            if (is_minimal_fat_hammock(g, s, 2)) good.push_back(s);
    }
    std::sort(good.begin(), good.end());

    // greedy family with pairwise disjoint interiors
    std::vector<Capping> out;
    std::vector<char> taken(g.n(), 0);
    for (const auto& s : good) {
        Hammock h = make_hammock(g, s);
        bool clash = false;
        for (int v : h.interior())
            if (taken[v]) clash = true;
        if (clash) continue;
        Capping c = cap(g, h);
        if (vertex_connectivity(c.graph) < 3)
            throw InternalAssertionFailed("extreme component capping not 3-connected", "");
        for (int v : h.interior()) taken[v] = 1;
        out.push_back(std::move(c));
    }
    if (out.empty())
        throw InternalAssertionFailed("extreme components: none found", "");
    return out;
}

std::vector<Capping> extreme_3_components(const Graph& g) {
    if (g.min_degree() < 3)
        throw HypothesisViolation("extreme components: min degree < 3");
    auto out = extreme_3_components_engine(g);
    if (out.size() < 2)
        throw InternalAssertionFailed("extreme components: fewer than two found", "");
    return out;
}

}  // namespace mk
