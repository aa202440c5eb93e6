#pragma once

#include "gw/graph.hpp"
#include "gw/graph_vector.hpp"
#include "gw/orientation.hpp"
#include "gw/rational.hpp"

#include <string>
#include <vector>

namespace gw {

/// Finite-dimensional Lie algebra with an invariant nondegenerate scalar
/// product, given by structure constants c_ab^c and the metric g_ab.
/// Derived data: the fully lowered tensor c_abc = sum_d c_ab^d g_dc (ad-
/// invariance makes it totally antisymmetric) and the exact inverse metric.
struct MetrizedLieAlgebra {
    int dim = 0;
    std::string name;                                    // preset name or input digest
    std::vector<std::vector<std::vector<Rat>>> structure; // [a][b][c] = c_ab^c
    std::vector<std::vector<Rat>> metric;                // [a][b]
    std::vector<std::vector<std::vector<Rat>>> lowered;  // [a][b][c] = c_abc
    std::vector<std::vector<Rat>> metric_inverse;

    mutable int validation_cache = 0; // 0 unknown, +1 passed, -1 failed
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string witness; // index tuple on failure
};
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass = false;
};

/// Checks antisymmetry of c_ab^c, the Jacobi identity, symmetry and
/// nondegeneracy of the metric, and ad-invariance (full antisymmetry of
/// the lowered tensor). Failures are report entries with a witness, never
/// exceptions.
ValidationReport validate_algebra(const MetrizedLieAlgebra& algebra);

/// c_ab^c = epsilon_abc with the identity metric.
MetrizedLieAlgebra so3_algebra();
/// Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h and the trace
/// form of the defining representation.
MetrizedLieAlgebra sl2_algebra();

/// Parses {"dim": d, "structure": [[a,b,c,"num/den"],...] (upper index
/// last), "metric": [[a,b,"num/den"],...]}; omitted entries are zero, the
/// lowered tensor and inverse metric are derived. Throws input_error on
/// malformed documents or a singular metric.
MetrizedLieAlgebra parse_algebra(const std::string& json_text);

/// State sum over dart-index assignments: product over edges of
/// g^{-1}(tail index, head index) and over vertices of the lowered tensor
/// read in cyclic order. Cyclic invariance of c_abc makes the starting
/// point irrelevant; reversing one vertex's cyclic order negates the
/// value. Throws input_error if the algebra fails validation or cyclic
/// data is missing or incomplete.
Rat lie_weight(const Graph& g, const CyclicData& cyclic, const MetrizedLieAlgebra& algebra);

/// Linear extension of lie_weight to normalized graph vectors: each
/// canonical class is evaluated with its reference cyclic data and the
/// orientation dictionary supplies the sign. Vanishes on every ihx_expand
/// output (the Jacobi identity).
Rat lie_weight_vector(const GraphVector& v, const MetrizedLieAlgebra& algebra);

} // namespace gw
