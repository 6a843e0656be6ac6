#include "doctest.h"

#include <set>

#include "minorkit/canonical.hpp"
#include "minorkit/errors.hpp"
#include "minorkit/hammock.hpp"
#include "minorkit/named_graphs.hpp"
#include "test_util.hpp"

using namespace mk;
using namespace mk::testutil;

namespace {

// two K5's sharing the triangle {2,3,4}: vertices 0,1 on one side, 5,6 on the other
Graph two_k5_shared_triangle() {
    Graph g(7);
    for (int u : {0, 1, 2, 3, 4})
        for (int v : {0, 1, 2, 3, 4})
            if (u < v) g.add_edge(u, v);
    for (int u : {2, 3, 4, 5, 6})
        for (int v : {2, 3, 4, 5, 6})
            if (u < v) g.add_edge(u, v);
    return g;
}

// exhaustive oracle: all minimal fat k-hammocks by scanning every connected subset
std::vector<std::vector<int>> minimal_fat_oracle(const Graph& g, int k) {
    std::vector<std::vector<int>> fat;
    for (const auto& s : connected_subsets(g)) {
        auto b = boundary(g, s);
        if (static_cast<int>(b.size()) == k && s.size() >= static_cast<size_t>(k) + 2)
            fat.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (const auto& s : fat) {
        bool minimal = true;
        for (const auto& t : fat) {
            if (t == s) continue;
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hammock classification is a function of sizes") {
    Graph g = two_k5_shared_triangle();
    Hammock h = make_hammock(g, {0, 1, 2, 3, 4});
    CHECK(h.k() == 3);
    CHECK(h.bnd == std::vector<int>{2, 3, 4});
    CHECK(h.fat());
    CHECK(h.interior() == std::vector<int>{0, 1});

    Hammock t = make_hammock(g, {2, 3, 4});
    CHECK(t.trivial());
    CHECK_THROWS(make_hammock(g, {0, 6}));  // disconnected set
}

TEST_CASE("fat hammock enumeration agrees with the exhaustive oracle") {
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(rng, draw(rng, 5, 9), 0.45);
        if (!is_connected(g)) continue;
        for (int k = 2; k <= 3; ++k) {
            std::vector<int> all(g.n());
            for (int v = 0; v < g.n(); ++v) all[v] = v;
            auto got = fat_hammocks_within(g, all, k);
            std::set<std::vector<int>> got_set(got.begin(), got.end());
            std::set<std::vector<int>> want;
            for (const auto& s : connected_subsets(g)) {
                auto b = boundary(g, s);
                if (static_cast<int>(b.size()) == k && s.size() >= static_cast<size_t>(k) + 2)
                    want.insert(s);
            }
            CHECK(got_set == want);
        }
    }
}

TEST_CASE("minimal fat hammock: two K5's sharing a triangle") {
    Graph g = two_k5_shared_triangle();
    Hammock h = minimal_fat_hammock(g, 3);
    // either K5 side qualifies; the lexicographic stream returns the 0,1 side
    CHECK(h.vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(is_minimal_fat_hammock(g, h.vertices, 3));

    auto oracle = minimal_fat_oracle(g, 3);
    CHECK(std::find(oracle.begin(), oracle.end(), h.vertices) != oracle.end());
}

TEST_CASE("minimal fat hammock: unique nontrivial 3-cut gives the smaller side") {
    // K5 side 0..4 glued to a bigger 3-connected chunk through triangle 2,3,4
    Graph g = two_k5_shared_triangle();
    int w = g.add_vertex();
    g.add_edge(w, 5);
    g.add_edge(w, 6);
    g.add_edge(w, 2);
    auto oracle = minimal_fat_oracle(g, 3);
    Hammock h = minimal_fat_hammock(g, 3);
    CHECK(std::find(oracle.begin(), oracle.end(), h.vertices) != oracle.end());
}

TEST_CASE("minimal fat hammock refuses trivial-only hosts") {
    CHECK_THROWS_AS(minimal_fat_hammock(complete_graph(6), 5), NoFatHammock);
    CHECK_THROWS_AS(minimal_fat_hammock(petersen(), 3), NoFatHammock);
}

TEST_CASE("two disjoint minimal fat hammocks") {
    Graph g = two_k5_shared_triangle();
    auto [h1, h2] = two_disjoint_minimal_fat(g, 3);
    CHECK(h1.vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(h2.vertices == std::vector<int>{2, 3, 4, 5, 6});
    std::set<int> i1(h1.interior().begin(), h1.interior().end());
    for (int v : h2.interior()) CHECK_FALSE(i1.count(v));

    // three K5's glued along a common triangle
    Graph t(9);
    auto add_k5 = [&](std::vector<int> vs) {
        for (int u : vs)
            for (int v : vs)
                if (u < v) t.add_edge(u, v);
    };
    add_k5({0, 1, 2, 3, 4});
    add_k5({0, 1, 2, 5, 6});
    add_k5({0, 1, 2, 7, 8});
    auto [a, b] = two_disjoint_minimal_fat(t, 3);
    std::set<int> ia(a.interior().begin(), a.interior().end());
    for (int v : b.interior()) CHECK_FALSE(ia.count(v));

    CHECK_THROWS_AS(two_disjoint_minimal_fat(complete_graph(6), 5), NoFatHammock);
}

TEST_CASE("fat3 avoidance: breaker edge ends up spanned or outside") {
    std::mt19937 rng(41);
    int exercised = 0;
    for (int it = 0; it < 120 && exercised < 25; ++it) {
        Graph g = random_graph(rng, draw(rng, 6, 9), 0.5);
        if (!is_connected(g) || g.min_degree() < 3) continue;
        int kappa = vertex_connectivity(g);
        if (kappa < 1 || kappa > 3) continue;
        bool nontrivial = false;
        for (const auto& d : all_disconnectors(g, kappa))
            if (!d.trivial) nontrivial = true;
        if (!nontrivial) continue;
        auto es = g.edges();
        auto e = es[rng() % es.size()];
        Hammock h = minimal_fat_hammock(g, kappa, e);
        ++exercised;
        bool a_in = std::binary_search(h.vertices.begin(), h.vertices.end(), e.first);
        bool b_in = std::binary_search(h.vertices.begin(), h.vertices.end(), e.second);
        if (a_in && b_in) {
            CHECK(std::binary_search(h.bnd.begin(), h.bnd.end(), e.first));
            CHECK(std::binary_search(h.bnd.begin(), h.bnd.end(), e.second));
        }
        CHECK(is_minimal_fat_hammock(g, h.vertices, kappa));
    }
    CHECK(exercised > 0);
}

TEST_CASE("cap: window edge real or virtual") {
    // two K4's sharing an edge: window already adjacent, no virtual edge
    Graph g(6);
    for (int u : {0, 1, 2, 3})
        for (int v : {0, 1, 2, 3})
            if (u < v) g.add_edge(u, v);
    for (int u : {2, 3, 4, 5})
        for (int v : {2, 3, 4, 5})
            if (u < v) g.add_edge(u, v);
    Hammock side = make_hammock(g, {0, 1, 2, 3});
    CHECK(side.k() == 2);
    Capping c = cap(g, side);
    CHECK_FALSE(c.virtual_edge);
    CHECK(c.graph.edge_count() == 6);

    // P4 inside a theta: endpoints as window, capping closes a cycle
    Graph theta(6);
    theta.add_edge(0, 1);
    theta.add_edge(1, 2);
    theta.add_edge(2, 3);  // path A
    theta.add_edge(0, 4);
    theta.add_edge(4, 3);  // path B
    theta.add_edge(0, 5);
    theta.add_edge(5, 3);  // path C
    Hammock sideA = make_hammock(theta, {0, 1, 2, 3});
    Capping cA = cap(theta, sideA);
    CHECK(cA.virtual_edge);
    CHECK(girth(cA.graph) == 4);  // C4 closed by the virtual edge

    Hammock notfat = make_hammock(g, {2, 3});
    CHECK_THROWS_AS(cap(g, notfat), HypothesisViolation);
}

TEST_CASE("augment: apex degree, inverse, 3-connectivity on minimal fat hammocks") {
    Graph g = two_k5_shared_triangle();
    Hammock h = make_hammock(g, {0, 1, 2, 3, 4});
    auto a = augment(g, h);
    CHECK(a.graph.degree(a.apex) == 3);
    auto [back, m] = delete_vertices(a.graph, {a.apex});
    auto [sub, m2] = induced_subgraph(g, h.vertices);
    CHECK(back == sub);

    // fat2: augmentation of a minimal fat 3-hammock of a 3-connected host
    CHECK(vertex_connectivity(g) == 3);
    Hammock mh = minimal_fat_hammock(g, 3);
    CHECK(vertex_connectivity(augment(g, mh).graph) >= 3);
}

TEST_CASE("fat2 sweep on random 3-connected hosts") {
    std::mt19937 rng(59);
    int exercised = 0;
    for (int it = 0; it < 150 && exercised < 20; ++it) {
        Graph g = random_graph(rng, draw(rng, 6, 8), 0.55);
        if (vertex_connectivity(g) != 3) continue;
        auto oracle = minimal_fat_oracle(g, 3);
        if (oracle.empty()) continue;
        ++exercised;
        for (const auto& s : oracle) {
            Hammock h = make_hammock(g, s);
            CHECK(vertex_connectivity(augment(g, h).graph) >= 3);
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("extreme components: shared edge, shared nonadjacent pair, chain of three") {
    // two K4's sharing an edge
    Graph g1(6);
    for (int u : {0, 1, 2, 3})
        for (int v : {0, 1, 2, 3})
            if (u < v) g1.add_edge(u, v);
    for (int u : {2, 3, 4, 5})
        for (int v : {2, 3, 4, 5})
            if (u < v) g1.add_edge(u, v);
    auto ex1 = extreme_3_components(g1);
    REQUIRE(ex1.size() == 2);
    for (const auto& c : ex1) {
        CHECK_FALSE(c.virtual_edge);
        CHECK(is_isomorphic(c.graph, complete_graph(4)));
    }

    // two K4's sharing two nonadjacent vertices: both sides capped virtually
    Graph g2(6);
    // K4 minus an edge on {0,1,2,3} with the missing pair {0,3} as the cut
    auto add_k4_minus = [&](int a, int b, int c, int d) {
        // edges: all pairs except a-d
        g2.add_edge(a, b);
        g2.add_edge(a, c);
        g2.add_edge(b, c);
        g2.add_edge(b, d);
        g2.add_edge(c, d);
    };
    add_k4_minus(0, 1, 2, 3);
    add_k4_minus(0, 4, 5, 3);
    auto ex2 = extreme_3_components(g2);
    REQUIRE(ex2.size() == 2);
    for (const auto& c : ex2) {
        CHECK(c.virtual_edge);
        CHECK(is_isomorphic(c.graph, complete_graph(4)));
    }

    // chain of three K4's glued on independent 2-cuts: the two end K4's
    Graph g3(8);
    auto add_k4 = [&](std::vector<int> vs) {
        for (int u : vs)
            for (int v : vs)
                if (u < v) g3.add_edge(u, v);
    };
    add_k4({0, 1, 2, 3});
    add_k4({2, 3, 4, 5});
    add_k4({4, 5, 6, 7});
    auto ex3 = extreme_3_components(g3);
    REQUIRE(ex3.size() == 2);
    std::set<std::vector<int>> hosts;
    for (const auto& c : ex3) hosts.insert(c.host_vertices);
    CHECK(hosts.count({0, 1, 2, 3}) == 1);
    CHECK(hosts.count({4, 5, 6, 7}) == 1);

    CHECK_THROWS_AS(extreme_3_components(petersen()), HypothesisViolation);  // kappa = 3
}

TEST_CASE("descent reaches a minimal element from every fat hammock") {
    std::mt19937 rng(71);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(rng, draw(rng, 6, 9), 0.5);
        if (!is_connected(g)) continue;
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        for (int k = 2; k <= 3; ++k) {
            auto fats = fat_hammocks_within(g, all, k);
            for (size_t i = 0; i < fats.size(); i += 3) {
                auto m = descend_to_minimal(g, fats[i], k);
                CHECK(is_minimal_fat_hammock(g, m, k));
                CHECK(std::includes(fats[i].begin(), fats[i].end(), m.begin(), m.end()));
            }
        }
    }
}
