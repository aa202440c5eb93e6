#include "gw/diagram_space.hpp"

#include "gw/canonical.hpp"
#include "gw/errors.hpp"
#include "gw/generate.hpp"
#include "gw/orientation.hpp"

#include <algorithm>
#include <map>

namespace gw {

GraphVector ihx_expand(const Graph& g, int w) {
    if (w < 0 || w >= g.num_vertices) throw input_error("split vertex out of range");
    auto val = g.valences();
    for (int v = 0; v < g.num_vertices; ++v) {
        int expect = (v == w) ? 4 : 3;
        if (val[v] != expect)
            throw input_error("ihx_expand needs one 4-valent vertex, the rest trivalent");
    }
    for (const auto& [a, b] : g.edges)
        if (a == b && a == w) throw input_error("ihx_expand needs no tadpole at the split vertex");

    auto w_darts = g.darts_at(w); // increasing dart id
    const int patterns[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    const int pattern_signs[3] = {1, -1, 1};

    GraphVector out;
    for (int p = 0; p < 3; ++p) {
        int keep0 = w_darts[patterns[p][0]], keep1 = w_darts[patterns[p][1]];
        int move0 = w_darts[patterns[p][2]], move1 = w_darts[patterns[p][3]];

        Graph split;
        split.num_vertices = g.num_vertices + 1;
        int fresh = g.num_vertices;
        split.edges = g.edges;
        for (int d : {move0, move1}) {
            auto& e = split.edges[d / 2];
            if (d % 2 == 0)
                e.first = fresh;
            else
                e.second = fresh;
        }
        split.edges.emplace_back(w, fresh); // darts 2E at w, 2E+1 at fresh

        CyclicData cyc = default_cyclic(split);
        cyc.orders[w] = {keep0, keep1, 2 * g.num_edges()};
        cyc.orders[fresh] = {move0, move1, 2 * g.num_edges() + 1};

        out.add_term(split, orientation_from_cyclic(split, cyc), Rat(pattern_signs[p]));
    }
    return out;
}

DimensionReport space_dimension(int num_vertices, bool include_ihx, bool connected_only) {
    if (num_vertices <= 0 || num_vertices % 2 != 0)
        throw input_error("diagram spaces need a positive even vertex count");
    if (num_vertices > 8) throw input_error("diagram space dimensions supported up to 8 vertices");

    DimensionReport report{.classes = {},
                           .ihx_sources = {},
                           .relation_matrix = SparseMatrixQ(0, 0),
                           .rank = 0,
                           .dimension = 0};
    for (const auto& g : generate_trivalent(num_vertices, connected_only, /*allow_tadpoles=*/false))
        if (!has_orientation_reversing_automorphism(g)) report.classes.push_back(g);

    if (!include_ihx) {
        report.relation_matrix = SparseMatrixQ(0, static_cast<int>(report.classes.size()));
        report.dimension = static_cast<int>(report.classes.size());
        return report;
    }

    // Sources live one vertex below the trivalent top; the valence profile
    // there is forced to be a single 4-valent vertex.
    int src_vertices = num_vertices - 1;
    int src_edges = 3 * num_vertices / 2 - 1;
    for (const auto& g : generate_min_valence3(src_vertices, src_edges, connected_only))
        if (!has_orientation_reversing_automorphism(g)) report.ihx_sources.push_back(g);

    std::map<std::string, int> col_index;
    for (int i = 0; i < static_cast<int>(report.classes.size()); ++i)
        col_index[report.classes[i].serialize()] = i;

    SparseMatrixQ m(static_cast<int>(report.ihx_sources.size()),
                    static_cast<int>(report.classes.size()));
    for (int r = 0; r < static_cast<int>(report.ihx_sources.size()); ++r) {
        const Graph& src = report.ihx_sources[r];
        auto val = src.valences();
        int w = -1;
        for (int v = 0; v < src.num_vertices; ++v)
            if (val[v] == 4) w = v;
        if (w < 0) throw internal_error("IHX source without a 4-valent vertex: " + src.serialize());
        GraphVector relation = ihx_expand(src, w);
        for (const auto& [key, term] : relation.terms()) {
            auto it = col_index.find(key);
            if (it == col_index.end())
                throw internal_error("IHX relation leaves the trivalent class list at " + key);
            m.add(r, it->second, term.coeff);
        }
    }
    report.relation_matrix = std::move(m);
    report.rank = rational_rank(report.relation_matrix);
    report.dimension = static_cast<int>(report.classes.size()) - report.rank;
    return report;
}

} // namespace gw
