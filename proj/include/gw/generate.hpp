#pragma once

#include "gw/graph.hpp"

#include <vector>

namespace gw {

/// One canonical representative per isomorphism class of trivalent graphs
/// on num_vertices vertices, sorted by serialization. num_vertices must be
/// even and <= 10 (desk scale). Tadpoles count twice toward the valence of
/// their vertex.
std::vector<Graph> generate_trivalent(int num_vertices, bool connected_only, bool allow_tadpoles);

/// One canonical representative per isomorphism class of tadpole-free
/// graphs with the given vertex and edge counts and every valence >= 3,
/// sorted by serialization. These are the graded chain-group supports of
/// the graph complex.
std::vector<Graph> generate_min_valence3(int num_vertices, int num_edges, bool connected_only);

} // namespace gw
