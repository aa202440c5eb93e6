#include "gw/canonical.hpp"

#include "gw/errors.hpp"
#include "gw/util.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace gw {

Relabeled relabel_graph(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.num_vertices)
        throw input_error("relabel permutation has wrong size");

    struct Item {
        std::pair<int, int> key; // sorted new endpoints
        int old_edge;
        bool flipped; // new low endpoint is the old second endpoint
    };
    std::vector<Item> items;
    items.reserve(g.edges.size());
    for (int e = 0; e < g.num_edges(); ++e) {
        int a = perm[g.edges[e].first];
        int b = perm[g.edges[e].second];
        if (a <= b)
            items.push_back({{a, b}, e, false});
        else
            items.push_back({{b, a}, e, true});
    }
    // Stable order on (key, old index) keeps parallel-edge matching
    // deterministic.
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(x.key, x.old_edge) < std::tie(y.key, y.old_edge);
    });

    Relabeled out;
    out.graph.num_vertices = g.num_vertices;
    out.graph.edges.reserve(items.size());
    out.dart_map.assign(g.num_darts(), -1);
    int flips = 0;
    for (int ne = 0; ne < static_cast<int>(items.size()); ++ne) {
        const Item& it = items[ne];
        out.graph.edges.push_back(it.key);
        if (it.flipped) {
            out.dart_map[2 * it.old_edge] = 2 * ne + 1;
            out.dart_map[2 * it.old_edge + 1] = 2 * ne;
        } else {
            out.dart_map[2 * it.old_edge] = 2 * ne;
            out.dart_map[2 * it.old_edge + 1] = 2 * ne + 1;
        }
        // Normal-form direction: tail at the smaller endpoint (tadpole:
        // dart 2e). The direction reverses exactly when the old order of
        // the endpoints disagrees with the new one.
        auto [u, v] = g.edges[it.old_edge];
        if (u != v) {
            bool old_first_is_tail = (u < v);
            bool new_first_is_tail = !it.flipped;
            if (old_first_is_tail != new_first_is_tail) flips++;
        }
    }
    out.orientation_sign = permutation_parity(perm) * ((flips % 2 == 0) ? 1 : -1);
    return out;
}

namespace {

// Invariant key per vertex, used only to prune the automorphism search
// (an automorphism preserves valence and loop count).
std::vector<std::pair<int, int>> vertex_keys(const Graph& g) {
    std::vector<std::pair<int, int>> keys(g.num_vertices, {0, 0});
    for (const auto& [u, v] : g.edges) {
        keys[u].first++;
        keys[v].first++;
        if (u == v) keys[u].second++;
    }
    return keys;
}

// The sorted edge list of a labeling is lexicographically smaller exactly
// when the row-major upper-triangular multiplicity vector is larger (more
// copies of an earlier pair postpone every later, larger pair). Comparing
// multiplicity vectors entry by entry avoids building edge lists in the
// canonical search.
std::vector<int> multiplicity_vector(const std::vector<std::vector<int>>& m,
                                     const std::vector<int>& old_of_new) {
    int n = static_cast<int>(old_of_new.size());
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(m[old_of_new[i]][old_of_new[j]]);
    return out;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm best;
    if (g.num_vertices == 0) {
        best.graph = g;
        return best;
    }
    int n = g.num_vertices;
    auto m = g.multiplicity_matrix();
    // old_of_new[i] = original vertex receiving canonical label i; the scan
    // covers every permutation and keeps the lexicographically largest
    // multiplicity vector (= smallest serialized edge list).
    std::vector<int> old_of_new(n);
    for (int i = 0; i < n; ++i) old_of_new[i] = i;
    std::vector<int> best_vec = multiplicity_vector(m, old_of_new);
    std::vector<int> best_old_of_new = old_of_new;
    while (std::next_permutation(old_of_new.begin(), old_of_new.end())) {
        size_t idx = 0;
        int verdict = 0;
        for (int i = 0; i < n && verdict == 0; ++i) {
            const auto& row = m[old_of_new[i]];
            for (int j = i; j < n; ++j, ++idx) {
                int entry = row[old_of_new[j]];
                if (entry != best_vec[idx]) {
                    verdict = (entry > best_vec[idx]) ? 1 : -1;
                    break;
                }
            }
        }
        if (verdict > 0) {
            best_vec = multiplicity_vector(m, old_of_new);
            best_old_of_new = old_of_new;
        }
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[best_old_of_new[i]] = i;
    Relabeled r = relabel_graph(g, perm);
    best.graph = std::move(r.graph);
    best.vertex_map = std::move(perm);
    best.dart_map = std::move(r.dart_map);
    best.orientation_sign = r.orientation_sign;
    return best;
}

bool is_canonical_labeling(const Graph& g) {
    int n = g.num_vertices;
    if (n == 0) return true;
    auto m = g.multiplicity_matrix();
    // DFS over prefixes of old_of_new. The first row of the permuted
    // multiplicity matrix is the leading block of the comparison vector,
    // so a prefix that already loses against the identity prunes its
    // entire subtree, and one that wins ends the search.
    std::vector<int> old_of_new;
    std::vector<bool> used(n, false);
    old_of_new.reserve(n);
    // returns +1 if some completion beats the identity, -1 if the whole
    // subtree loses, 0 if undecided/equal
    std::function<int()> dfs = [&]() -> int {
        int depth = static_cast<int>(old_of_new.size());
        if (depth == n) {
            // row 0 ties the identity; decide on the remaining rows
            size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                const auto& row = m[old_of_new[i]];
                const auto& id_row = m[i];
                for (int j = i; j < n; ++j, ++idx) {
                    int entry = row[old_of_new[j]];
                    if (entry != id_row[j]) return (entry > id_row[j]) ? 1 : -1;
                }
            }
            return 0;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            // compare the newly determined first-row entry (0, depth)
            if (depth > 0) {
                int entry = m[old_of_new[0]][w];
                int id_entry = m[0][depth];
                if (entry > id_entry) return 1;
                if (entry < id_entry) continue; // this branch already loses
            } else if (m[w][w] != m[0][0]) {
                if (m[w][w] > m[0][0]) return 1;
                continue;
            }
            used[w] = true;
            old_of_new.push_back(w);
            int verdict = dfs();
            old_of_new.pop_back();
            used[w] = false;
            if (verdict > 0) return 1;
        }
        return 0;
    };
    return dfs() <= 0;
}

namespace {

// All vertex permutations preserving the multiplicity matrix.
std::vector<std::vector<int>> incidence_preserving_perms(const Graph& g) {
    auto m = g.multiplicity_matrix();
    auto keys = vertex_keys(g);
    int n = g.num_vertices;
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || keys[w] != keys[v]) continue;
            bool ok = (m[v][v] == m[w][w]);
            for (int u = 0; ok && u < v; ++u)
                if (m[v][u] != m[w][perm[u]]) ok = false;
            if (!ok) continue;
            used[w] = true;
            perm[v] = w;
            rec(v + 1);
            used[w] = false;
            perm[v] = -1;
        }
    };
    rec(0);
    return out;
}

} // namespace

std::vector<Automorphism> automorphisms(const Graph& g) {
    std::vector<Automorphism> out;

    // Edge instances grouped by unordered endpoint pair.
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[e];
        groups[{std::min(u, v), std::max(u, v)}].push_back(e);
    }

    for (const auto& vp : incidence_preserving_perms(g)) {
        // For each group, the image group and all instance matchings.
        std::vector<const std::vector<int>*> src;
        std::vector<const std::vector<int>*> dst;
        for (const auto& [key, es] : groups) {
            auto tgt = std::make_pair(std::min(vp[key.first], vp[key.second]),
                                      std::max(vp[key.first], vp[key.second]));
            src.push_back(&es);
            dst.push_back(&groups.at(tgt));
        }

        // matching[gi] = permutation of positions within group gi;
        // tadpole_swap bits add the within-edge dart exchange.
        std::vector<std::vector<int>> matchings(groups.size());
        std::function<void(size_t)> rec = [&](size_t gi) {
            if (gi == matchings.size()) {
                // collect tadpole edges (image is a tadpole iff source is)
                std::vector<int> tadpoles;
                for (int e = 0; e < g.num_edges(); ++e)
                    if (g.edges[e].first == g.edges[e].second) tadpoles.push_back(e);
                int tcount = static_cast<int>(tadpoles.size());
                for (int mask = 0; mask < (1 << tcount); ++mask) {
                    Automorphism a;
                    a.vertex_perm = vp;
                    a.dart_perm.assign(g.num_darts(), -1);
                    size_t idx2 = 0;
                    for (const auto& [key, es] : groups) {
                        const auto& match = matchings[idx2];
                        const auto& target = *dst[idx2];
                        for (size_t i = 0; i < es.size(); ++i) {
                            int e = es[i];
                            int f = target[match[i]];
                            auto [u, v] = g.edges[e];
                            auto [a2, b2] = g.edges[f];
                            if (u == v) {
                                bool swapped = false;
                                for (int t = 0; t < tcount; ++t)
                                    if (tadpoles[t] == e && (mask >> t) & 1) swapped = true;
                                a.dart_perm[2 * e] = swapped ? 2 * f + 1 : 2 * f;
                                a.dart_perm[2 * e + 1] = swapped ? 2 * f : 2 * f + 1;
                            } else {
                                // dart 2e sits at u; it must land at vp[u]
                                if (vp[u] == a2) {
                                    a.dart_perm[2 * e] = 2 * f;
                                    a.dart_perm[2 * e + 1] = 2 * f + 1;
                                } else {
                                    a.dart_perm[2 * e] = 2 * f + 1;
                                    a.dart_perm[2 * e + 1] = 2 * f;
                                }
                            }
                        }
                        idx2++;
                    }
                    out.push_back(std::move(a));
                }
                return;
            }
            std::vector<int> match(src[gi]->size());
            std::iota(match.begin(), match.end(), 0);
            do {
                matchings[gi] = match;
                rec(gi + 1);
            } while (std::next_permutation(match.begin(), match.end()));
        };
        rec(0);
    }
    return out;
}

int automorphism_sign(const Graph& g, const Automorphism& a) {
    int sign = permutation_parity(a.vertex_perm);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[e];
        int tail = (u <= v) ? 2 * e : 2 * e + 1;
        int image = a.dart_perm[tail];
        int f = image / 2;
        auto [x, y] = g.edges[f];
        int f_tail = (x <= y) ? 2 * f : 2 * f + 1;
        if (image != f_tail) sign = -sign;
    }
    return sign;
}

bool has_orientation_reversing_automorphism(const Graph& g) {
    if (g.has_tadpole()) return true;
    auto m = g.multiplicity_matrix();
    for (const auto& vp : incidence_preserving_perms(g)) {
        int sign = permutation_parity(vp);
        for (int u = 0; u < g.num_vertices; ++u)
            for (int v = u + 1; v < g.num_vertices; ++v)
                if (vp[u] > vp[v] && (m[u][v] % 2 == 1)) sign = -sign;
        if (sign < 0) return true;
    }
    return false;
}

} // namespace gw
