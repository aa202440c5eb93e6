#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gw {

/// Finite multigraph given by darts (half-edges). Edge e owns darts 2e and
/// 2e+1; the edge pairing is d <-> d^1. Tadpoles (u == v) are representable.
/// Values are immutable after construction; all operations are pure.
struct Graph {
    int num_vertices = 0;
    /// edges[e] = (u, v): dart 2e sits at u, dart 2e+1 at v. The order of
    /// this list defines edge indices, so parallel edges are distinguishable.
    std::vector<std::pair<int, int>> edges;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_darts() const { return 2 * num_edges(); }
    int dart_vertex(int dart) const {
        const auto& e = edges[dart / 2];
        return (dart % 2 == 0) ? e.first : e.second;
    }
    /// The other dart of the same edge.
    static int mate(int dart) { return dart ^ 1; }

    std::vector<int> valences() const;
    /// Darts at v, in increasing dart id.
    std::vector<int> darts_at(int v) const;
    bool is_trivalent() const;
    bool has_tadpole() const;
    bool is_connected() const;
    /// Loop order E - V + 1 summed over components as E - V + #components.
    int loop_order() const;

    /// Symmetric multiplicity matrix; m[u][v] = number of edges joining u,v
    /// (a tadpole counts once, on the diagonal).
    std::vector<std::vector<int>> multiplicity_matrix() const;

    /// "V=<n>;E=<u1>-<v1>,..." with every edge written low-high and the
    /// list sorted lexicographically. Equal strings <=> equal labeled graphs.
    std::string serialize() const;
};

/// Cyclic order of the darts at each vertex, up to rotation.
struct CyclicData {
    /// orders[v] = the darts at v, in cyclic sequence.
    std::vector<std::vector<int>> orders;
};

/// Parses the JSON graph document: {"vertices": n, "edges": [[u,v],...],
/// "cyclic_orders": {"v": [edge indices]}} (cyclic_orders optional; each
/// incidence listed once, a tadpole's edge twice; the first occurrence of a
/// tadpole edge means dart 2e, the second 2e+1). Throws input_error on
/// malformed documents, out-of-range vertices, or cyclic orders that do not
/// match the valence.
struct ParsedGraph {
    Graph graph;
    bool has_cyclic = false;
    CyclicData cyclic;
};
ParsedGraph parse_graph(const std::string& json_text);

/// Graph from an edge list, for tests and presets.
Graph make_graph(int vertices, std::vector<std::pair<int, int>> edges);

/// theta: 2 vertices joined by 3 parallel edges.
Graph theta_graph();
/// Complete graph on 4 vertices.
Graph k4_graph();

} // namespace gw
