#include "doctest.h"

#include <set>

#include "minorkit/canonical.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/graph_algos.hpp"
#include "minorkit/io.hpp"
#include "minorkit/named_graphs.hpp"
#include "test_util.hpp"

using namespace mk;
using namespace mk::testutil;

TEST_CASE("graph basics stay simple") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate ignored
    CHECK(g.edge_count() == 1);
    CHECK_THROWS(g.add_edge(2, 2));
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("girth: C5, trees, Petersen") {
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK(girth(path_graph(6)) == kInfiniteGirth);
    CHECK(girth(petersen()) == 5);
    CHECK(girth_oracle(petersen()) == 5);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(heawood()) == 6);
    CHECK(girth(pg_incidence(5)) == 6);
}

TEST_CASE("girth >= 5 iff no K3 and no C4") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(rng, draw(rng, 4, 9), 0.4);
        bool k3 = has_triangle(g);
        bool c4 = false;
        for (int u = 0; u < g.n() && !c4; ++u)
            for (int v = u + 1; v < g.n() && !c4; ++v) {
                if (g.has_edge(u, v)) continue;
                int common = 0;
                for (int w : g.adj[u])
                    if (g.has_edge(v, w)) ++common;
                if (common >= 2) c4 = true;
            }
        // C4 through an edge uv also counts
        for (auto [u, v] : g.edges())
            for (int w : g.adj[u])
                if (w != v)
                    for (int x : g.adj[v])
                        if (x != u && x != w && g.has_edge(w, x)) c4 = true;
        CHECK((girth(g) >= 5) == (!k3 && !c4));
    }
}

TEST_CASE("vertex connectivity: K6, C6, Petersen, flow vs subset oracle") {
    CHECK(vertex_connectivity(complete_graph(6)) == 5);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(connectivity_oracle(petersen()) == 3);

    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(rng, draw(rng, 2, 8), 0.45);
        CHECK(vertex_connectivity(g) == connectivity_oracle(g));
    }
}

TEST_CASE("find_disconnectors: C4 antipodal pairs are trivial") {
    auto ds = find_disconnectors(cycle_graph(4), 2);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].vertices == std::vector<int>{0, 2});
    CHECK(ds[1].vertices == std::vector<int>{1, 3});
    for (const auto& d : ds) {
        CHECK(d.trivial);  // both leftover vertices are singletons
        CHECK(d.components_after.size() == 2);
    }
}

TEST_CASE("find_disconnectors: K5 has none of size 3") {
    CHECK(find_disconnectors(complete_graph(5), 3).empty());
}

TEST_CASE("find_disconnectors: Petersen 3-cuts are the ten neighborhoods") {
    Graph g = petersen();
    auto ds = find_disconnectors(g, 3);
    REQUIRE(ds.size() == 10);
    std::set<std::vector<int>> got;
    for (const auto& d : ds) {
        CHECK(d.trivial);
        got.insert(d.vertices);
    }
    for (int v = 0; v < 10; ++v) {
        std::vector<int> nb(g.adj[v]);
        CHECK(got.count(nb) == 1);
    }
}

TEST_CASE("connectivity_class: K5, Petersen, glued K4s") {
    CHECK(connectivity_class(complete_graph(5), 4) == ConnectivityClass::InternallyK);
    CHECK(connectivity_class(petersen(), 4) == ConnectivityClass::InternallyK);

    // two K4's sharing a triangle is K5 minus an edge: its only 3-cut is the
    // shared triangle, which isolates a vertex, so the class is internally-4
    Graph k5e = delete_edge(complete_graph(5), 0, 4);
    CHECK(connectivity_class(k5e, 4) == ConnectivityClass::InternallyK);

    // two K5's sharing a triangle: the shared triangle leaves two components
    // of size 2, a genuinely nontrivial 3-disconnector
    Graph g(7);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (int u : {2, 3, 4, 5}) g.add_edge(u, 6);
    g.add_edge(5, 6);
    for (int u : {2, 3, 4}) g.add_edge(u, 5);
    CHECK(connectivity_class(g, 4) == ConnectivityClass::Neither);
    CHECK(internally_4_connected(petersen()));
    CHECK_FALSE(internally_4_connected(g));
}

TEST_CASE("blocks: single block, P4, two triangles at a cutvertex") {
    auto bt1 = blocks(cycle_graph(5));
    REQUIRE(bt1.blocks.size() == 1);
    CHECK(bt1.blocks[0].leaf);
    CHECK(bt1.cut_vertices.empty());

    auto bt2 = blocks(path_graph(4));
    CHECK(bt2.blocks.size() == 3);
    int leaves = 0;
    for (const auto& b : bt2.blocks) leaves += b.leaf;
    CHECK(leaves == 2);

    Graph tt(5);
    tt.add_edge(0, 1);
    tt.add_edge(1, 2);
    tt.add_edge(2, 0);
    tt.add_edge(2, 3);
    tt.add_edge(3, 4);
    tt.add_edge(4, 2);
    auto bt3 = blocks(tt);
    CHECK(bt3.blocks.size() == 2);
    CHECK(bt3.cut_vertices == std::vector<int>{2});
    for (const auto& b : bt3.blocks) CHECK(b.leaf);

    CHECK_THROWS(blocks(Graph(3)));
}

TEST_CASE("blocks partition the edge set; cycles stay within one block") {
    std::mt19937 rng(23);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(rng, draw(rng, 2, 9), 0.35);
        if (!is_connected(g)) continue;
        auto bt = blocks(g);
        long long total = 0;
        std::set<std::pair<int, int>> seen;
        for (const auto& b : bt.blocks)
            for (auto [u, v] : b.edges) {
                auto e = std::minmax(u, v);
                CHECK(seen.insert({e.first, e.second}).second);
                ++total;
            }
        CHECK(total == g.edge_count());
    }
}

TEST_CASE("contract: triangle edge, Petersen spokes to K5, everything to K1") {
    auto r = contract_set(cycle_graph(3), {0, 1});
    CHECK(r.graph.n() == 2);
    CHECK(r.graph.edge_count() == 1);

    Graph p = petersen();
    Graph cur = p;
    for (int spoke = 0; spoke < 5; ++spoke) {
        // recompute the image of the spoke pair after earlier contractions
        int a = -1, b = -1;
        // original spoke endpoints spoke, spoke+5 tracked by labels trick:
        // instead, recontract by searching for the pair of merged classes.
        (void)a;
        (void)b;
    }
    // simpler: contract spokes one at a time, tracking images
    std::vector<int> image(10);
    for (int v = 0; v < 10; ++v) image[v] = v;
    cur = p;
    for (int s = 0; s < 5; ++s) {
        auto res = contract_set(cur, {image[s], image[s + 5]});
        for (int v = 0; v < 10; ++v) image[v] = res.map.to_new[image[v]];
        cur = res.graph;
    }
    CHECK(cur.n() == 5);
    CHECK(is_isomorphic(cur, complete_graph(5)));

    std::vector<int> all(10);
    for (int v = 0; v < 10; ++v) all[v] = v;
    auto k1 = contract_set(p, all);
    CHECK(k1.graph.n() == 1);

    Graph disc(4);
    disc.add_edge(0, 1);
    CHECK_THROWS(contract_set(disc, {0, 2}));
}

TEST_CASE("contraction never grows the edge count and keeps the graph simple") {
    std::mt19937 rng(5);
    for (int it = 0; it < 150; ++it) {
        Graph g = random_graph(rng, draw(rng, 3, 9), 0.4);
        auto subs = connected_subsets(g);
        if (subs.empty()) continue;
        const auto& part = subs[rng() % subs.size()];
        auto r = contract_set(g, part);
        CHECK(r.graph.edge_count() <= g.edge_count());
        for (int v = 0; v < r.graph.n(); ++v) {
            CHECK(std::is_sorted(r.graph.adj[v].begin(), r.graph.adj[v].end()));
            CHECK(std::adjacent_find(r.graph.adj[v].begin(), r.graph.adj[v].end()) ==
                  r.graph.adj[v].end());
            CHECK(!r.graph.has_edge(v, v));
        }
    }
}

TEST_CASE("edge list parsing") {
    Graph tri = parse_edge_list("0 1\n1 2\n2 0\n");
    CHECK(tri.n() == 3);
    CHECK(tri.edge_count() == 3);

    Graph iso = parse_edge_list("n=3\n");
    CHECK(iso.n() == 3);
    CHECK(iso.edge_count() == 0);

    CHECK_THROWS_AS(parse_edge_list("0 1\nbroken\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 5\n"), ParseError);

    Graph p = petersen();
    CHECK(parse_edge_list(serialize_edge_list(p)) == p);
}

TEST_CASE("graph6 round trips") {
    Graph star = parse_graph6("D?{");
    CHECK(star.n() == 5);
    CHECK(star.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));
    CHECK(serialize_graph6(star) == "D?{");

    std::mt19937 rng(99);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(rng, draw(rng, 1, 70), 0.3);
        CHECK(parse_graph6(serialize_graph6(g)) == g);
    }
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
}

TEST_CASE("boundary: whole graph, single vertex, hexagon of coronene") {
    Graph p = petersen();
    std::vector<int> all(10);
    for (int v = 0; v < 10; ++v) all[v] = v;
    CHECK(boundary(p, all).empty());
    CHECK(boundary(p, {3}) == std::vector<int>{3});

    Graph c = coronene();
    // inner hexagon: every vertex has a rim spoke
    CHECK(boundary(c, {0, 1, 2, 3, 4, 5}) == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("canonical labeling distinguishes and identifies") {
    CHECK(is_isomorphic(petersen(), petersen()));
    CHECK_FALSE(is_isomorphic(petersen(), cycle_graph(10)));
    // relabelled Petersen
    std::mt19937 rng(3);
    Graph p = petersen();
    for (int it = 0; it < 20; ++it) {
        std::vector<int> perm(10);
        for (int v = 0; v < 10; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph q(10);
        for (auto [u, v] : p.edges()) q.add_edge(perm[u], perm[v]);
        CHECK(canonical_form(q) == canonical_form(p));
        auto m = find_isomorphism(p, q);
        REQUIRE(m.has_value());
        for (auto [u, v] : p.edges()) CHECK(q.has_edge((*m)[u], (*m)[v]));
    }
    CHECK(is_isomorphic(complete_graph(8), complete_graph(8)));
}

TEST_CASE("named graph shapes") {
    CHECK(wagner_v8().n() == 8);
    CHECK(wagner_v8().edge_count() == 12);
    CHECK(heawood().n() == 14);
    CHECK(heawood().edge_count() == 21);
    CHECK(girth(heawood()) == 6);
    Graph pg5 = pg_incidence(5);
    CHECK(pg5.n() == 62);
    CHECK(pg5.edge_count() == 186);
    for (int v = 0; v < pg5.n(); ++v) CHECK(pg5.degree(v) == 6);
    CHECK(girth(pg5) == 6);
    Graph pg4 = pg_incidence(4);  // exercises GF(4)
    CHECK(pg4.n() == 42);
    CHECK(pg4.edge_count() == 105);
    CHECK(girth(pg4) == 6);

    Graph d = dodecahedron();
    CHECK(d.n() == 20);
    CHECK(d.edge_count() == 30);
    CHECK(girth(d) == 5);
    CHECK(vertex_connectivity(d) == 3);

    Graph hs = hoffman_singleton();
    CHECK(hs.n() == 50);
    CHECK(hs.edge_count() == 175);
    CHECK(girth(hs) == 5);

    Graph ico = icosahedron();
    CHECK(ico.n() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(vertex_connectivity(ico) == 5);

    Graph lk = line_graph_k33();
    CHECK(lk.n() == 9);
    CHECK(lk.edge_count() == 18);

    Graph cor = coronene();
    CHECK(cor.n() == 24);
    CHECK(girth(cor) == 6);
    int twos = 0;
    for (int v = 0; v < cor.n(); ++v) twos += cor.degree(v) == 2;
    CHECK(twos == 12);
}
