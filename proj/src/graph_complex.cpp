#include "gw/graph_complex.hpp"

#include "gw/canonical.hpp"
#include "gw/errors.hpp"
#include "gw/generate.hpp"
#include "gw/util.hpp"

#include <algorithm>

namespace gw {

GraphVector contract_edge(const Graph& g, const Orientation& orientation, int edge) {
    if (edge < 0 || edge >= g.num_edges()) throw input_error("edge index out of range");
    auto [a, b] = g.edges[edge];
    if (a == b) throw input_error("cannot contract a tadpole");
    int tail = std::min(a, b), head = std::max(a, b);

    // Parity of moving (tail, head) to the front, everything else in order.
    std::vector<int> order;
    order.reserve(g.num_vertices);
    order.push_back(tail);
    order.push_back(head);
    for (int v = 0; v < g.num_vertices; ++v)
        if (v != tail && v != head) order.push_back(v);
    int sign = orientation.sign * permutation_parity(order);

    // Merge: the fused vertex takes label 0, the rest keep their relative
    // order starting at 1.
    std::vector<int> vmap(g.num_vertices, -1);
    vmap[tail] = vmap[head] = 0;
    int next = 1;
    for (int v = 0; v < g.num_vertices; ++v)
        if (vmap[v] < 0) vmap[v] = next++;

    Graph result;
    result.num_vertices = g.num_vertices - 1;
    int flips = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (e == edge) continue;
        auto [u, v] = g.edges[e];
        int nu = vmap[u], nv = vmap[v];
        result.edges.emplace_back(nu, nv);
        int old_tail = std::min(u, v), old_head = std::max(u, v);
        if (u != v && vmap[old_tail] > vmap[old_head]) flips++;
    }
    if (flips % 2 == 1) sign = -sign;

    GraphVector out;
    out.add_term(result, Orientation{sign}, Rat(1));
    return out;
}

GraphVector differential(const Graph& g, const Orientation& orientation) {
    GraphVector out;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edges[e].first == g.edges[e].second) continue;
        out.add(contract_edge(g, orientation, e));
    }
    return out;
}

GradedBasis graded_basis(int loop_order, bool connected_only) {
    if (loop_order < 2) throw input_error("graded basis needs loop order >= 2");
    GradedBasis basis;
    basis.loop_order = loop_order;
    for (int v = 1; v <= basis.top_degree(); ++v) {
        int e = v + loop_order - 1;
        std::vector<Graph> kept;
        for (const auto& g : generate_min_valence3(v, e, connected_only))
            if (!has_orientation_reversing_automorphism(g)) kept.push_back(g);
        basis.classes[v] = std::move(kept);
    }
    return basis;
}

SparseMatrixQ differential_matrix(const GradedBasis& basis, int vertex_count) {
    const auto& cols = basis.classes.at(vertex_count);
    static const std::vector<Graph> empty;
    const auto& rows = (vertex_count - 1 >= 1) ? basis.classes.at(vertex_count - 1) : empty;

    std::map<std::string, int> row_index;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_index[rows[i].serialize()] = i;

    SparseMatrixQ m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        GraphVector image = differential(cols[j], Orientation{1});
        for (const auto& [key, term] : image.terms()) {
            if (term.graph.loop_order() != basis.loop_order)
                throw internal_error("differential changed the loop order at " + key);
            auto it = row_index.find(key);
            if (it == row_index.end())
                throw internal_error("differential left the graded basis at " + key);
            m.add(it->second, j, term.coeff);
        }
    }
    return m;
}

std::map<int, int> homology_dims(int loop_order, bool connected_only) {
    if (loop_order < 2 || loop_order > 4)
        throw input_error("homology supported for loop orders 2..4");
    GradedBasis basis = graded_basis(loop_order, connected_only);
    int top = basis.top_degree();

    std::map<int, int> rank; // rank of d: C_V -> C_{V-1}
    for (int v = 1; v <= top; ++v) rank[v] = rational_rank(differential_matrix(basis, v));

    std::map<int, int> dims;
    for (int v = 1; v <= top; ++v) {
        int n = static_cast<int>(basis.classes.at(v).size());
        int incoming = (v + 1 <= top) ? rank[v + 1] : 0;
        dims[v] = n - rank[v] - incoming;
    }
    return dims;
}

} // namespace gw
