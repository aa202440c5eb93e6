#pragma once

#include "gw/graph.hpp"
#include "gw/graph_vector.hpp"
#include "gw/linalg.hpp"
#include "gw/orientation.hpp"

#include <map>
#include <vector>

namespace gw {

/// Contracts edge e of the oriented graph: the orientation is transported
/// so that e runs from the first vertex to the second (accumulating
/// parity), then e is deleted and its endpoints merge into the first slot.
/// The result is normalized, so contractions that create a tadpole or land
/// on a class with an orientation-reversing automorphism come back zero.
/// Throws input_error if e is a tadpole.
GraphVector contract_edge(const Graph& g, const Orientation& orientation, int edge);

/// Sum of contract_edge over all non-tadpole edges. Lowers the vertex and
/// edge counts by one each, preserving the loop order.
GraphVector differential(const Graph& g, const Orientation& orientation);

/// Chain-group supports of the graph complex at fixed loop order:
/// connected tadpole-free graphs, valences >= 3, no orientation-reversing
/// automorphism, sorted canonically. Vertex counts run 1..2(loop_order-1);
/// the top degree is trivalent.
struct GradedBasis {
    int loop_order = 0;
    std::map<int, std::vector<Graph>> classes; // vertex count -> basis
    int top_degree() const { return 2 * (loop_order - 1); }
};
GradedBasis graded_basis(int loop_order, bool connected_only = true);

/// Matrix of the differential C_V -> C_{V-1} over the basis lists: rows
/// are indexed by classes at V-1, columns by classes at V.
SparseMatrixQ differential_matrix(const GradedBasis& basis, int vertex_count);

/// Homology dimensions per vertex count, dim ker(d at V) - rank(d at V+1),
/// for loop_order in [2, 4]. Throws input_error outside that range.
std::map<int, int> homology_dims(int loop_order, bool connected_only = true);

} // namespace gw
