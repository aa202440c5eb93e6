#pragma once

#include "gw/graph.hpp"
#include "gw/orientation.hpp"
#include "gw/polynomial.hpp"
#include "gw/rational.hpp"

#include <vector>

namespace gw {

/// R^{2n} with coordinates p_1..p_n, q_1..q_n and the standard Poisson
/// tensor omega^{-1}(dp_i, dq_i) = +1.
struct SymplecticSpace {
    int n = 1;
    int dim() const { return 2 * n; }
    /// Antisymmetric; +1 on (p_i, q_i), -1 on (q_i, p_i), 0 otherwise.
    int omega_inverse(int i, int j) const {
        if (j == i + n) return 1;
        if (i == j + n) return -1;
        return 0;
    }
};

/// Fully symmetric 3-index rational tensor over 2n directions, encoding a
/// cubic form through the full-sum convention H3(x) = sum over all ordered
/// triples T_ijk x_i x_j x_k.
class CubicTensor {
public:
    explicit CubicTensor(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim, Rat(0)) {}

    int dim() const { return dim_; }
    const Rat& at(int i, int j, int k) const { return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    Rat& at(int i, int j, int k) { return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    bool is_zero() const;
    bool is_symmetric() const;

    CubicTensor operator+(const CubicTensor& o) const;
    CubicTensor scaled(const Rat& c) const;
    bool operator==(const CubicTensor& o) const { return dim_ == o.dim_ && a_ == o.a_; }

private:
    int dim_;
    std::vector<Rat> a_;
};

/// Third Taylor coefficient: the degree-3 part of H as a symmetric tensor,
/// monomial coefficients divided by their multinomial multiplicity so the
/// full-sum convention reproduces H3. Linear; degree != 3 parts are ignored.
CubicTensor taylor3(const Polynomial& hamiltonian);

/// Inverse direction: the cubic polynomial of a symmetric tensor under the
/// same convention.
Polynomial cubic_polynomial(const CubicTensor& t);

/// Contraction of one tensor per vertex along the graph: sum over all
/// dart-index assignments of the product of vertex tensor entries times
/// omega^{-1}(tail index, head index) per edge (edges directed low-to-high
/// as in the orientation normal form), times the orientation sign.
/// Internally the sum runs over the 2n nonzero symplectic pairings per
/// edge; the dart-tuple enumeration it must agree with lives in the tests.
/// Throws input_error unless the graph is trivalent with one tensor of
/// dimension 2n per vertex.
Rat contract_graph(const Graph& g, const Orientation& orientation,
                   const std::vector<CubicTensor>& tensors, const SymplecticSpace& space);

/// Same contraction with explicit edge directions: tail_darts[e] is the
/// dart chosen as the tail of edge e. Reversing one entry negates the
/// value (omega^{-1} is antisymmetric).
Rat contract_graph_directed(const Graph& g, int sign, const std::vector<int>& tail_darts,
                            const std::vector<CubicTensor>& tensors, const SymplecticSpace& space);

/// Antisymmetrized cochain evaluation: the signed sum over all argument
/// permutations of contract_graph on the third Taylor coefficients (no
/// 1/(2N)! normalization, keeping integer inputs integer).
Rat cochain_eval(const Graph& g, const Orientation& orientation,
                 const std::vector<Polynomial>& hamiltonians, const SymplecticSpace& space);

/// Lie-algebra cochain differential applied to the graph cochain,
/// evaluated on 2N+1 arguments: sum over i<j of (-1)^(i+j) times the
/// cochain on ({H_i,H_j}, ..., leaving out H_i and H_j). Arguments must lie
/// in Ham^1 (degree >= 3); brackets are truncated at the given order. The
/// return value is the exact defect (zero for a cocycle).
Rat cochain_differential_eval(const Graph& g, const Orientation& orientation,
                              const std::vector<Polynomial>& hamiltonians,
                              const SymplecticSpace& space, int truncation);

/// Infinitesimal symplectic action of a quadratic Hamiltonian on a cubic
/// coefficient tensor: taylor3 of the Poisson bracket.
CubicTensor sp_action(const Polynomial& quadratic, const CubicTensor& t,
                      const SymplecticSpace& space);

/// Sum over slots of the contraction with one tensor replaced by its
/// sp_action image; vanishes identically because the contraction is built
/// from invariant tensors.
Rat sp_invariance_defect(const Graph& g, const Orientation& orientation,
                         const Polynomial& quadratic, const std::vector<CubicTensor>& tensors,
                         const SymplecticSpace& space);

} // namespace gw
