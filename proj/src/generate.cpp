#include "gw/generate.hpp"

#include "gw/canonical.hpp"
#include "gw/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gw {

namespace {

struct PairType {
    int u, v; // u <= v; u == v is a tadpole
};

// Enumerates edge multisets over pair types in lex order. exact_degree < 0
// means "at least 3 with a fixed edge budget"; otherwise every vertex ends
// at exactly exact_degree.
void enumerate_multisets(int V, int E, int exact_degree, bool allow_tadpoles, bool connected_only,
                         std::map<std::string, Graph>& classes) {
    std::vector<PairType> pairs;
    for (int u = 0; u < V; ++u) {
        if (allow_tadpoles) pairs.push_back({u, u});
        for (int v = u + 1; v < V; ++v) pairs.push_back({u, v});
    }

    std::vector<int> degree(V, 0);
    std::vector<int> mult(pairs.size(), 0);

    // True when swapping labels a and b strictly improves (enlarges) the
    // row-major multiplicity vector, i.e. the labeling is not canonical.
    auto swap_improves = [V](const std::vector<std::vector<int>>& m, int a, int b) {
        auto t = [&](int x) { return x == a ? b : (x == b ? a : x); };
        for (int i = 0; i < V; ++i)
            for (int j = i; j < V; ++j) {
                int entry = m[t(i)][t(j)];
                if (entry != m[i][j]) return entry > m[i][j];
            }
        return false;
    };

    auto finish_candidate = [&]() {
        Graph g;
        g.num_vertices = V;
        for (size_t i = 0; i < pairs.size(); ++i)
            for (int k = 0; k < mult[i]; ++k) g.edges.emplace_back(pairs[i].u, pairs[i].v);

        // Every labeling of a class is enumerated, so only the canonical
        // one is kept; cheap transposition rejects run first.
        auto m = g.multiplicity_matrix();
        for (int i = 0; i + 1 < V; ++i)
            if (swap_improves(m, i, i + 1)) return;
        for (int a = 0; a < V; ++a)
            for (int b = a + 2; b < V; ++b)
                if (swap_improves(m, a, b)) return;
        if (connected_only && !g.is_connected()) return;
        if (!is_canonical_labeling(g)) return;
        classes.emplace(g.serialize(), std::move(g));
    };

    std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
        if (idx == pairs.size()) {
            if (used != E) return;
            for (int v = 0; v < V; ++v) {
                if (exact_degree >= 0 && degree[v] != exact_degree) return;
                if (exact_degree < 0 && degree[v] < 3) return;
            }
            finish_candidate();
            return;
        }
        const PairType& p = pairs[idx];
        bool tadpole = (p.u == p.v);
        int cap = E - used;
        if (exact_degree >= 0) {
            int ru = exact_degree - degree[p.u];
            int rv = exact_degree - degree[p.v];
            cap = std::min(cap, tadpole ? ru / 2 : std::min(ru, rv));
        }
        // Degree of p.u is final after its last pair (u, V-1); the final
        // vertex closes at the end-of-list check.
        bool closes_u = (p.v == V - 1 && p.u < V - 1);
        for (int k = 0; k <= cap; ++k) {
            degree[p.u] += (tadpole ? 2 : 1) * k;
            if (!tadpole) degree[p.v] += k;
            mult[idx] = k;
            bool feasible = true;
            if (closes_u) {
                int d = degree[p.u];
                feasible = (exact_degree >= 0) ? (d == exact_degree) : (d >= 3);
            }
            if (feasible) rec(idx + 1, used + k);
            degree[p.u] -= (tadpole ? 2 : 1) * k;
            if (!tadpole) degree[p.v] -= k;
            mult[idx] = 0;
        }
    };
    rec(0, 0);
}

} // namespace

std::vector<Graph> generate_trivalent(int num_vertices, bool connected_only, bool allow_tadpoles) {
    if (num_vertices <= 0 || num_vertices % 2 != 0)
        throw input_error("trivalent generation needs a positive even vertex count");
    if (num_vertices > 10) throw input_error("trivalent generation supports at most 10 vertices");
    int E = 3 * num_vertices / 2;
    std::map<std::string, Graph> classes;
    enumerate_multisets(num_vertices, E, 3, allow_tadpoles, connected_only, classes);
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [ser, g] : classes) out.push_back(g);
    return out;
}

std::vector<Graph> generate_min_valence3(int num_vertices, int num_edges, bool connected_only) {
    if (num_vertices <= 0) throw input_error("vertex count must be positive");
    if (2 * num_edges < 3 * num_vertices) return {};
    std::map<std::string, Graph> classes;
    enumerate_multisets(num_vertices, num_edges, -1, /*allow_tadpoles=*/false, connected_only,
                        classes);
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [ser, g] : classes) out.push_back(g);
    return out;
}

} // namespace gw
