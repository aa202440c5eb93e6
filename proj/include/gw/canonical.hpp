#pragma once

#include "gw/graph.hpp"

#include <vector>

namespace gw {

/// Result of relabeling vertices by perm (old label -> new label). Edges of
/// the result are stored low-high and sorted, so equal labeled graphs have
/// equal edge lists. dart_map tracks every dart; orientation_sign is the
/// sign picked up by the normal-form orientation under the relabeling:
/// parity(perm) times one flip per edge whose direction reverses.
struct Relabeled {
    Graph graph;
    std::vector<int> dart_map;
    int orientation_sign = 1;
};
Relabeled relabel_graph(const Graph& g, const std::vector<int>& perm);

/// Canonical representative: the relabeling whose serialized edge list is
/// lexicographically minimal (the search runs over labelings that sort
/// vertices by an isomorphism-invariant key, which always contains the
/// minimum). Deterministic; idempotent on its own output.
struct CanonicalForm {
    Graph graph;
    std::vector<int> vertex_map; // old label -> canonical label
    std::vector<int> dart_map;
    int orientation_sign = 1;
};
CanonicalForm canonical_form(const Graph& g);

/// True iff the graph's own labeling is the canonical one. Cheaper than
/// canonical_form for rejection: the scan stops at the first improving
/// permutation. Generation relies on this, since every labeling of a
/// class is enumerated and only the canonical one has to be kept.
bool is_canonical_labeling(const Graph& g);

/// A graph automorphism, as compatible vertex and dart permutations (the
/// dart permutation commutes with the edge pairing and incidence).
struct Automorphism {
    std::vector<int> vertex_perm;
    std::vector<int> dart_perm;
};

/// The full automorphism group by pruned brute force over vertex
/// permutations, each extended by all consistent edge matchings (parallel
/// edges permute, tadpole darts may swap). Desk scale: V <= 10.
std::vector<Automorphism> automorphisms(const Graph& g);

/// Orientation sign of an automorphism: vertex parity times one flip per
/// edge mapped tail-to-head.
int automorphism_sign(const Graph& g, const Automorphism& a);

/// True iff some automorphism has sign -1 (the oriented class is zero).
/// Tadpole graphs always qualify: swapping the two loop darts reverses one
/// edge and fixes the vertices.
bool has_orientation_reversing_automorphism(const Graph& g);

} // namespace gw
