#pragma once

#include "gw/graph.hpp"
#include "gw/graph_vector.hpp"
#include "gw/linalg.hpp"

#include <vector>

namespace gw {

/// Splits the 4-valent vertex w of g into two trivalent vertices joined by
/// a new edge, once per perfect matching of w's four darts, with signs
/// +,-,+ in dart order: (d0 d1 | d2 d3) - (d0 d2 | d1 d3) + (d0 d3 | d1 d2).
/// Each term's orientation comes from cyclic data that keeps every other
/// vertex in increasing dart order and reads the split pair then the new
/// dart at the two new vertices. The result is normalized; its span over
/// all admissible (g, w) is the IHX relation subspace. Throws input_error
/// unless g has exactly one 4-valent vertex w, all others trivalent, and no
/// tadpole at w.
GraphVector ihx_expand(const Graph& g, int w);

/// Dimension of the span of canonical oriented trivalent classes modulo
/// the selected relations. AS is implicit in normalization; include_ihx
/// additionally quotients by the span of ihx_expand over all sources with
/// one vertex less (dimension = #classes - rank).
struct DimensionReport {
    std::vector<Graph> classes;    // nonzero oriented trivalent classes, canonical order
    std::vector<Graph> ihx_sources;
    SparseMatrixQ relation_matrix; // one row per source; empty for AS only
    int rank = 0;
    int dimension = 0;
};
DimensionReport space_dimension(int num_vertices, bool include_ihx, bool connected_only);

} // namespace gw
