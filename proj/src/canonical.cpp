#include "minorkit/canonical.hpp"

#include <algorithm>
#include <map>

namespace mk {

namespace {

using Cells = std::vector<std::vector<int>>;  // ordered partition, cells in order

// Stable color refinement; cell order is part of the result.
Cells refine(const Graph& g, Cells cells) {
    std::vector<int> color(g.n(), 0);
    bool changed = true;
    while (changed) {
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[c]) color[v] = c;
        // signature: (own color, sorted neighbor colors)
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> split;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[c]) {
                std::vector<int> nb;
                nb.reserve(g.adj[v].size());
                for (int w : g.adj[v]) nb.push_back(color[w]);
                std::sort(nb.begin(), nb.end());
                split[{c, std::move(nb)}].push_back(v);
            }
        Cells next;
        next.reserve(split.size());
        for (auto& [sig, vs] : split) next.push_back(std::move(vs));
        changed = next.size() != cells.size();
        cells = std::move(next);
    }
    return cells;
}

struct Canonizer {
    const Graph& g;
    int n;
    // candidate encoding: for each position i, bits has_edge(p[i], p[j]) j<i,
    // appended row after row as bytes of '0'/'1' (simple and comparable).
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit Canonizer(const Graph& gr) : g(gr), n(gr.n()) {}

    std::string prefix_rows(const std::vector<int>& perm, int upto) const {
        std::string s;
        for (int i = 1; i < upto; ++i)
            for (int j = 0; j < i; ++j) s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
        return s;
    }

    // state: -1 worse than best (prune), 0 equal so far, 1 better
    int compare_prefix(const std::string& pre) const {
        if (!have_best) return 1;
        auto cmp = best.compare(0, pre.size(), pre);
        if (cmp == 0) return 0;
        return pre > best.substr(0, pre.size()) ? 1 : -1;
    }

    void rec(Cells cells) {
        cells = refine(g, cells);
        std::vector<int> fixed;
        int branch_cell = -1;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
            if (cells[c].size() == 1 && branch_cell == -1)
                fixed.push_back(cells[c][0]);
            else if (branch_cell == -1)
                branch_cell = c;
        }
        if (branch_cell == -1) {
            std::string full = prefix_rows(fixed, n);
            if (!have_best || full > best) {
                best = full;
                best_perm = fixed;
                have_best = true;
            }
            return;
        }
        std::string pre = prefix_rows(fixed, static_cast<int>(fixed.size()));
        if (compare_prefix(pre) < 0) return;
        // branch on each vertex of the first non-singleton cell
        for (int v : cells[branch_cell]) {
            Cells next;
            for (int c = 0; c < branch_cell; ++c) next.push_back(cells[c]);
            next.push_back({v});
            std::vector<int> rest;
            for (int w : cells[branch_cell])
                if (w != v) rest.push_back(w);
            next.push_back(rest);
            for (int c = branch_cell + 1; c < static_cast<int>(cells.size()); ++c)
                next.push_back(cells[c]);
            rec(std::move(next));
        }
    }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g) {
    CanonResult r;
    if (g.n() == 0) {
        r.form = "0|";
        return r;
    }
    Canonizer cz(g);
    cz.rec(Cells{[&] {
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        return all;
    }()});
    r.form = std::to_string(g.n()) + "|" + cz.best;
    r.vertex_of = cz.best_perm;
    return r;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (!is_isomorphic(a, b)) return std::nullopt;
    CanonResult ca = canonical_labeling(a), cb = canonical_labeling(b);
    std::vector<int> m(a.n(), -1);
    for (int pos = 0; pos < a.n(); ++pos) m[ca.vertex_of[pos]] = cb.vertex_of[pos];
    return m;
}

}  // namespace mk
