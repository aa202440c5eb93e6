#include "gw/orientation.hpp"

#include "gw/errors.hpp"
#include "gw/util.hpp"

#include <algorithm>

namespace gw {

Orientation orientation_from_data(const Graph& g, const std::vector<int>& vertex_order,
                                  const std::vector<int>& tail_darts) {
    if (static_cast<int>(vertex_order.size()) != g.num_vertices)
        throw input_error("vertex_order has wrong size");
    if (static_cast<int>(tail_darts.size()) != g.num_edges())
        throw input_error("tail_darts has wrong size");

    int sign = permutation_parity(vertex_order);
    for (int e = 0; e < g.num_edges(); ++e) {
        int t = tail_darts[e];
        if (t / 2 != e) throw input_error("tail dart does not belong to its edge");
        auto [u, v] = g.edges[e];
        int normal_tail = (u <= v) ? 2 * e : 2 * e + 1;
        if (t != normal_tail) sign = -sign;
    }
    return Orientation{sign};
}

Orientation orientation_from_cyclic(const Graph& g, const CyclicData& c) {
    if (static_cast<int>(c.orders.size()) != g.num_vertices)
        throw input_error("cyclic data covers the wrong number of vertices");

    // Reference sequence: edges in index order, tail before head.
    std::vector<int> reference;
    reference.reserve(g.num_darts());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[e];
        int tail = (u <= v) ? 2 * e : 2 * e + 1;
        reference.push_back(tail);
        reference.push_back(Graph::mate(tail));
    }

    // Vertex-grouped sequence: each vertex's 3 darts in cyclic order,
    // rotated to start at the smallest (edge index, dart id).
    std::vector<int> grouped;
    grouped.reserve(g.num_darts());
    for (int v = 0; v < g.num_vertices; ++v) {
        const auto& cyc = c.orders[v];
        auto darts = g.darts_at(v);
        if (darts.size() != 3)
            throw input_error("vertex " + std::to_string(v) + " is not trivalent");
        if (cyc.size() != 3)
            throw input_error("cyclic order at vertex " + std::to_string(v) + " must list 3 darts");
        auto sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != darts)
            throw input_error("cyclic order at vertex " + std::to_string(v) +
                              " is not a permutation of its darts");
        size_t start = 0;
        for (size_t i = 1; i < 3; ++i) {
            if (std::make_pair(cyc[i] / 2, cyc[i]) < std::make_pair(cyc[start] / 2, cyc[start]))
                start = i;
        }
        for (size_t i = 0; i < 3; ++i) grouped.push_back(cyc[(start + i) % 3]);
    }

    std::vector<int> pos(g.num_darts(), -1);
    for (int i = 0; i < static_cast<int>(reference.size()); ++i) pos[reference[i]] = i;
    std::vector<int> perm;
    perm.reserve(grouped.size());
    for (int d : grouped) perm.push_back(pos[d]);
    return Orientation{permutation_parity(perm)};
}

CyclicData default_cyclic(const Graph& g) {
    CyclicData c;
    c.orders.resize(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) c.orders[v] = g.darts_at(v);
    return c;
}

CyclicData transport_cyclic(const CyclicData& c, const std::vector<int>& dart_map,
                            const Graph& relabeled, const std::vector<int>& vertex_map) {
    CyclicData out;
    out.orders.assign(relabeled.num_vertices, {});
    for (int v = 0; v < static_cast<int>(c.orders.size()); ++v) {
        std::vector<int> mapped;
        mapped.reserve(c.orders[v].size());
        for (int d : c.orders[v]) mapped.push_back(dart_map[d]);
        out.orders[vertex_map[v]] = std::move(mapped);
    }
    return out;
}

} // namespace gw
