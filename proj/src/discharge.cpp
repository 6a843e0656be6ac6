#include "minorkit/discharge.hpp"

#include <map>
#include <set>
#include <sstream>

#include "minorkit/errors.hpp"
#include "minorkit/io.hpp"

namespace mk {

namespace {

// dart (u,v) -> index of the face whose walk contains it
std::map<std::pair<int, int>, int> dart_faces(const PlaneEmbedding& emb) {
    std::map<std::pair<int, int>, int> df;
    for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
        const auto& w = emb.faces[f];
        for (size_t i = 0; i < w.size(); ++i) df[{w[i], w[(i + 1) % w.size()]}] = f;
    }
    return df;
}

}  // namespace

ChargeLedger initial_charges(const PlaneEmbedding& emb) {
    const Graph& g = emb.graph;
    ChargeLedger led;
    led.vertex_ch.resize(g.n());
    led.face_ch.resize(emb.faces.size());
    for (int v = 0; v < g.n(); ++v) led.vertex_ch[v] = Rat(6 - g.degree(v));
    for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
        if (f == emb.outer)
            led.face_ch[f] = Rat(-17, 3) - Rat(2 * emb.face_length(f));
        else
            led.face_ch[f] = Rat(6 - 2 * emb.face_length(f));
    }
    led.vertex_mod = led.vertex_ch;
    led.face_mod = led.face_ch;
    for (const Rat& r : led.vertex_ch) led.total_initial += r;
    for (const Rat& r : led.face_ch) led.total_initial += r;
    return led;
}

void redistribute(const PlaneEmbedding& emb, ChargeLedger& led) {
    const Graph& g = emb.graph;
    if (vertex_connectivity(g) < 2)
        throw HypothesisViolation("redistribute: host not 2-connected");
    const auto& outer_walk = emb.faces[emb.outer];
    std::set<int> on_outer(outer_walk.begin(), outer_walk.end());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 3 && !on_outer.count(v))
            throw HypothesisViolation("redistribute: low-valent vertex off the outer face");

    auto df = dart_faces(emb);
    const Rat send_outer_2(16, 5), send_outer_3(13, 8), send_other(4, 5);
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        std::vector<int> inc;
        for (int w : emb.rotation[v]) inc.push_back(df.at({v, w}));
        if (d == 2) {
            led.vertex_mod[v] -= send_outer_2 + send_other;
            led.face_mod[emb.outer] += send_outer_2;
            for (int f : inc)
                if (f != emb.outer) led.face_mod[f] += send_other;
        } else if (d == 3) {
            led.vertex_mod[v] -= send_outer_3 + send_other + send_other;
            led.face_mod[emb.outer] += send_outer_3;
            for (int f : inc)
                if (f != emb.outer) led.face_mod[f] += send_other;
        } else {
            for (int f : inc) {
                led.vertex_mod[v] -= send_other;
                led.face_mod[f] += send_other;
            }
        }
    }
    led.redistributed = true;
    led.positives.clear();
    for (int v = 0; v < g.n(); ++v)
        if (led.vertex_mod[v] > Rat(0)) led.positives.push_back("v" + std::to_string(v));
    for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
        if (led.face_mod[f] > Rat(0)) led.positives.push_back("f" + std::to_string(f));
}

ChargeLedger discharge(const PlaneEmbedding& emb, const std::vector<int>& s) {
    const Graph& g = emb.graph;
    if (vertex_connectivity(g) < 2) throw HypothesisViolation("dis1: host not 2-connected");
    if (girth(g) < 5) throw HypothesisViolation("dis1.1: girth below 5");

    const auto& outer_walk = emb.faces[emb.outer];
    std::set<int> on_outer(outer_walk.begin(), outer_walk.end());
    for (int v = 0; v < g.n(); ++v)
        if (!on_outer.count(v) && g.degree(v) < 4)
            throw HypothesisViolation("dis1.2: interior vertex of degree < 4");

    if (s.size() > 3) throw HypothesisViolation("dis1.3: |S| > 3");
    std::set<int> sset(s.begin(), s.end());
    for (int v : s) {
        if (!on_outer.count(v)) throw HypothesisViolation("dis1.3: S member off the outer face");
        if (g.degree(v) != 2) throw HypothesisViolation("dis1.3: S member not 2-valent");
    }
    for (int v : on_outer)
        if (!sset.count(v) && g.degree(v) < 3)
            throw HypothesisViolation("dis1.3: outer vertex outside S of degree < 3");

    ChargeLedger led = initial_charges(emb);
    redistribute(emb, led);
    led.S = s;
    std::sort(led.S.begin(), led.S.end());
    for (int v : on_outer) {
        if (sset.count(v)) continue;
        if (g.degree(v) == 3)
            led.S1.push_back(v);
        else
            led.S2.push_back(v);
    }
    std::sort(led.S1.begin(), led.S1.end());
    std::sort(led.S2.begin(), led.S2.end());
    return led;
}

std::string ledger_csv(const ChargeLedger& led) {
    std::ostringstream out;
    out << "element,ch,ch_mod\n";
    for (size_t v = 0; v < led.vertex_ch.size(); ++v)
        out << "v" << v << "," << led.vertex_ch[v] << "," << led.vertex_mod[v] << "\n";
    for (size_t f = 0; f < led.face_ch.size(); ++f)
        out << "f" << f << "," << led.face_ch[f] << "," << led.face_mod[f] << "\n";
    return out.str();
}

TwoValentReport check_two_valent_bound(const Graph& g) {
    if (vertex_connectivity(g) < 2)
        throw HypothesisViolation("two-valent bound: host not 2-connected");
    if (girth(g) < 6) throw HypothesisViolation("two-valent bound: girth below 6");
    auto pl = planarity(g);
    if (!pl.planar()) throw HypothesisViolation("two-valent bound: host not planar");

    TwoValentReport rep;
    const auto& emb = *pl.embedding;
    rep.V = g.n();
    rep.E = g.edge_count();
    rep.F = static_cast<long long>(emb.faces.size());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2) rep.two_valent.push_back(v);
    long long S = static_cast<long long>(rep.two_valent.size());
    rep.chain = {
        {rep.E, rep.V + rep.F - 2},                  // Euler, equality
        {2 * rep.E, 3 * (rep.V - S) + 2 * S},        // degree sum
        {2 * rep.E, 6 * rep.F},                      // girth bound
        {2 * rep.F + S - 4, rep.V},                  // substitution
        {rep.V, 2 * rep.F + 2},                      // substitution
        {S, 6},                                      // conclusion
    };
    if (rep.chain[0].first != rep.chain[0].second)
        throw InternalAssertionFailed("euler-formula", serialize_edge_list(g));
    for (size_t i = 1; i < rep.chain.size(); ++i)
        if (rep.chain[i].first < rep.chain[i].second)
            throw InternalAssertionFailed("two-valent-bound eq:" + std::to_string(i + 1),
                                          serialize_edge_list(g));
    rep.tight = S == 6;
    return rep;
}

NonplanarVerdict check_nonplanar_girth6(const Graph& g) {
    NonplanarVerdict verdict;
    try {
        verdict.breaker = nearly_k_long(g, 6);
    } catch (const NotNearlyLong&) {
        throw HypothesisViolation("nonplanar-girth6: not nearly 6-long");
    }
    if (!internally_4_connected(g))
        throw HypothesisViolation("nonplanar-girth6: not internally 4-connected");
    auto pl = planarity(g);
    if (pl.planar())
        throw InternalAssertionFailed("nearly-6-long-planarity", serialize_edge_list(g));
    verdict.witness = *pl.witness;
    return verdict;
}

OrderBoundReport check_order_bound(const Graph& g) {
    auto pl = planarity(g);
    if (!pl.planar()) throw HypothesisViolation("order bound: host not planar");
    if (!internally_4_connected(g))
        throw HypothesisViolation("order bound: not internally 4-connected");

    OrderBoundReport rep;
    if (girth(g) >= 5) {
        rep.used = Breaker::none();
    } else {
        bool has_vertex_breaker = false;
        std::optional<Breaker> three_valent, edge_breaker;
        for (int x = 0; x < g.n() && !three_valent; ++x) {
            auto [h, m] = delete_vertices(g, {x});
            if (girth(h) >= 5) {
                has_vertex_breaker = true;
                if (g.degree(x) == 3) three_valent = Breaker::vertex(x, 3);
            }
        }
        if (!three_valent)
            for (auto [u, v] : g.edges())
                if (girth(delete_edge(g, u, v)) >= 5) {
                    edge_breaker = Breaker::edge(u, v);
                    break;
                }
        if (three_valent)
            rep.used = *three_valent;
        else if (has_vertex_breaker)
            throw HypothesisViolation("order bound: vertex-breaker exists but no 3-valent one");
        else if (edge_breaker)
            rep.used = *edge_breaker;
        else
            throw HypothesisViolation("order bound: not nearly 5-long");
    }

    Graph body = g;
    if (rep.used.kind == Breaker::Kind::Vertex)
        body = delete_vertices(g, {rep.used.x}).first;
    else if (rep.used.kind == Breaker::Kind::Edge)
        body = delete_edge(g, rep.used.u, rep.used.v);

    if (vertex_connectivity(body) < 2)
        throw InternalAssertionFailed("order-bound body not 2-connected", serialize_edge_list(g));
    long long two_valent = 0;
    for (int v = 0; v < body.n(); ++v) two_valent += body.degree(v) == 2;
    if (two_valent > 3)
        throw InternalAssertionFailed("order-bound body has > 3 two-valent vertices",
                                      serialize_edge_list(g));

    rep.V = body.n();
    rep.E = body.edge_count();
    rep.F = rep.E - rep.V + 2;
    rep.order = g.n();
    rep.chain = {
        {2 * rep.E, 3 * (rep.V - 3) + 6},  // degree sum
        {2 * rep.E, 5 * rep.F},            // girth bound on faces
        {2 * rep.F, rep.V + 1},            // from degree sum + Euler
        {2 * rep.V - 4, 3 * rep.F},        // from girth bound + Euler
        {rep.order, 11},                   // conclusion
    };
    for (size_t i = 0; i + 1 < rep.chain.size(); ++i)
        if (rep.chain[i].first < rep.chain[i].second)
            throw InternalAssertionFailed("order-bound eq:" + std::to_string(12 + i),
                                          serialize_edge_list(g));
    if (rep.order < 11)
        throw InternalAssertionFailed("order-bound |G| >= 11", serialize_edge_list(g));
    return rep;
}

}  // namespace mk
