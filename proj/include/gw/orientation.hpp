#pragma once

#include "gw/graph.hpp"

#include <vector>

namespace gw {

/// Orientation of a graph: a total vertex order plus a direction per edge,
/// up to even changes (one vertex transposition = one sign, one edge
/// reversal = one sign). Stored in normal form — vertices in index order,
/// every edge directed from its smaller endpoint (tadpoles: tail = even
/// dart) — so only the accumulated sign survives.
struct Orientation {
    int sign = 1;

    Orientation reversed() const { return Orientation{-sign}; }
};

/// Orientation from explicit data: vertex_order[i] = the vertex in position
/// i, tail_darts[e] = the dart chosen as tail of edge e. Normalizes to the
/// stored form, accumulating parity and per-edge flips.
Orientation orientation_from_data(const Graph& g, const std::vector<int>& vertex_order,
                                  const std::vector<int>& tail_darts);

/// The trivalent dictionary from cyclic orders to orientations. The sign is
/// the parity of the permutation carrying the reference dart sequence
/// (edges in index order, tail before head, directions low-to-high) to the
/// vertex-grouped sequence (vertices in index order; at each vertex its 3
/// darts in cyclic order, starting from the dart of smallest edge index,
/// ties by dart id). Throws input_error on non-trivalent vertices or
/// incomplete cyclic data.
Orientation orientation_from_cyclic(const Graph& g, const CyclicData& c);

/// Cyclic data with every vertex's darts in increasing dart id — the
/// reference choice used when evaluating weight systems on canonical
/// oriented graphs.
CyclicData default_cyclic(const Graph& g);

/// Transports cyclic data along a dart relabeling.
CyclicData transport_cyclic(const CyclicData& c, const std::vector<int>& dart_map,
                            const Graph& relabeled, const std::vector<int>& vertex_map);

} // namespace gw
