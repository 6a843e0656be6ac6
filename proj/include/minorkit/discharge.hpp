#pragma once

#include "minorkit/graph_algos.hpp"
#include "minorkit/nearly_long.hpp"
#include "minorkit/planarity.hpp"
#include "minorkit/rational.hpp"

namespace mk {

// Exact charge bookkeeping for one plane embedding. Initial charges:
//   vertices 6-d(v); inner faces 6-2|f|; outer face -17/3 - 2|X|.
// Every connected plane graph then totals exactly 1/3.
struct ChargeLedger {
    Rat total_initial;
    std::vector<Rat> vertex_ch, vertex_mod;
    std::vector<Rat> face_ch, face_mod;
    std::vector<int> S;   // the designated 2-valent outer vertices
    std::vector<int> S1;  // 3-valent outer vertices
    std::vector<int> S2;  // remaining outer vertices
    bool redistributed = false;
    std::vector<std::string> positives;  // elements with positive modified charge

    Rat total_modified() const {
        Rat t;
        for (const Rat& r : vertex_mod) t += r;
        for (const Rat& r : face_mod) t += r;
        return t;
    }
};

ChargeLedger initial_charges(const PlaneEmbedding& emb);

// Applies the redistribution rules: 2-valent vertices send 16/5 to the
// outer face and 4/5 to their other face; 3-valent ones send 13/8 to the
// outer face and 4/5 to each other incident face; everything else sends 4/5
// per incident face. Requires a 2-connected host with all vertices of
// degree <= 3 on the outer face (otherwise the rules are ill-defined).
void redistribute(const PlaneEmbedding& emb, ChargeLedger& led);

// Full guarded discharge: host 2-connected, girth >= 5, interior vertices
// >= 4-valent, s lists <= 3 two-valent outer vertices and every other outer
// vertex is >= 3-valent. Throws HypothesisViolation naming the clause.
ChargeLedger discharge(const PlaneEmbedding& emb, const std::vector<int>& s);

// CSV export: element, ch, ch*.
std::string ledger_csv(const ChargeLedger& led);

struct TwoValentReport {
    std::vector<int> two_valent;
    long long V = 0, E = 0, F = 0;
    // inequality chain, as (lhs, rhs) with lhs >= rhs claimed
    std::vector<std::pair<long long, long long>> chain;
    bool tight = false;  // |S| == 6
};

// 2-connected planar girth >= 6 implies at least six 2-valent vertices;
// verifies the count and reports the Euler slack.
TwoValentReport check_two_valent_bound(const Graph& g);

struct NonplanarVerdict {
    Breaker breaker;
    NonplanarWitness witness;
};

// Nearly 6-long internally 4-connected graphs are nonplanar; returns the
// Kuratowski witness.
NonplanarVerdict check_nonplanar_girth6(const Graph& g);

struct OrderBoundReport {
    Breaker used;  // the element removed before the chain (none when girth >= 5)
    long long V = 0, E = 0, F = 0;  // of g minus the breaker
    std::vector<std::pair<long long, long long>> chain;
    long long order = 0;  // |g|, asserted >= 11
};

// Nearly 5-long internally 4-connected planar graphs (with the 3-valent
// vertex-breaker rule) have order >= 11.
OrderBoundReport check_order_bound(const Graph& g);

}  // namespace mk
