#include "minorkit/named_graphs.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace mk {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph wagner_v8() {
    Graph g = cycle_graph(8);
    for (int v = 0; v < 4; ++v) g.add_edge(v, v + 4);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer C5
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

namespace {

// Arithmetic in GF(q) for q in {2,3,5} (prime) and GF(4) via tables.
struct SmallField {
    int q;
    explicit SmallField(int q_) : q(q_) {
        if (q != 2 && q != 3 && q != 4 && q != 5)
            throw std::invalid_argument("pg_incidence: q must be 2, 3, 4 or 5");
    }
    int add(int a, int b) const {
        if (q == 4) return a ^ b;  // GF(4) as GF(2)[x]/(x^2+x+1), elements 0..3 as bit pairs
        return (a + b) % q;
    }
    int mul(int a, int b) const {
        if (q != 4) return (a * b) % q;
        static constexpr std::array<std::array<int, 4>, 4> t{{{0, 0, 0, 0},
                                                              {0, 1, 2, 3},
                                                              {0, 2, 3, 1},
                                                              {0, 3, 1, 2}}};
        return t[a][b];
    }
};

// Normalized homogeneous triples over GF(q): first nonzero coordinate is 1.
std::vector<std::array<int, 3>> projective_points(const SmallField& f) {
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < f.q; ++x)
        for (int y = 0; y < f.q; ++y)
            for (int z = 0; z < f.q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                int lead = x != 0 ? x : (y != 0 ? y : z);
                if (lead != 1) continue;
                pts.push_back({x, y, z});
            }
    return pts;
}

}  // namespace

Graph pg_incidence(int q) {
    SmallField f(q);
    auto pts = projective_points(f);
    int m = static_cast<int>(pts.size());  // q^2 + q + 1
    Graph g(2 * m);
    for (int p = 0; p < m; ++p)
        for (int l = 0; l < m; ++l) {
            int dot = f.add(f.add(f.mul(pts[p][0], pts[l][0]), f.mul(pts[p][1], pts[l][1])),
                            f.mul(pts[p][2], pts[l][2]));
            if (dot == 0) g.add_edge(p, m + l);
        }
    return g;
}

Graph cube_q3() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

Graph octahedron() {
    // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5) non-adjacent
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

Graph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, bottom 11
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + (i + 1) % 5, 6 + i);
    }
    return g;
}

Graph dodecahedron() {
    // outer C5 0..4, second ring 5..9, third ring 10..14, inner C5 15..19
    Graph g(20);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 10 + i);
        g.add_edge(5 + i, 10 + (i + 4) % 5);
        g.add_edge(10 + i, 15 + i);
        g.add_edge(15 + i, 15 + (i + 1) % 5);
    }
    return g;
}

Graph line_graph_k33() {
    // vertices (i,j) = 3*i + j; adjacent iff same row or same column
    Graph g(9);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
    return g;
}

Graph hoffman_singleton() {
    // pentagons P_h: vertices p(h,j), pentagram edges in Q_i: q(i,k);
    // p(h,j) ~ q(i, h*i + j mod 5)
    auto p = [](int h, int j) { return 5 * h + j; };
    auto qv = [](int i, int k) { return 25 + 5 * i + k; };
    Graph g(50);
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) g.add_edge(p(h, j), p(h, (j + 1) % 5));
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) g.add_edge(qv(i, k), qv(i, (k + 2) % 5));
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g.add_edge(p(h, j), qv(i, (h * i + j) % 5));
    return g;
}

Graph coronene() {
    // inner hexagon 0..5; rim cycle 6..23; spokes i -- 6+3i
    Graph g(24);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    for (int i = 0; i < 18; ++i) g.add_edge(6 + i, 6 + (i + 1) % 18);
    for (int i = 0; i < 6; ++i) g.add_edge(i, 6 + 3 * i);
    return g;
}

Graph subdivide_all_edges(const Graph& g, int times) {
    Graph h(g.n());
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int t = 0; t < times; ++t) {
            int w = h.add_vertex();
            h.add_edge(prev, w);
            prev = w;
        }
        h.add_edge(prev, v);
    }
    return h;
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "v8") return wagner_v8();
    if (name == "heawood") return heawood();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "lk33") return line_graph_k33();
    if (name == "cube") return cube_q3();
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "coronene") return coronene();
    if (name == "hoffman-singleton") return hoffman_singleton();
    if (name == "k5") return complete_graph(5);
    if (name == "k6") return complete_graph(6);
    if (name == "c6") return cycle_graph(6);
    throw std::invalid_argument("unknown named graph: " + name);
}

std::vector<std::string> named_graph_list() {
    return {"petersen", "v8",   "heawood", "dodecahedron",      "lk33", "cube", "octahedron",
            "icosahedron", "coronene", "hoffman-singleton", "k5",   "k6",   "c6"};
}

}  // namespace mk
