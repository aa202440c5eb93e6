#include "gw/symplectic.hpp"

#include "gw/errors.hpp"
#include "gw/util.hpp"

#include <algorithm>
#include <numeric>

namespace gw {

bool CubicTensor::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& r) { return r == 0; });
}

bool CubicTensor::is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            for (int k = j; k < dim_; ++k) {
                const Rat& v = at(i, j, k);
                if (at(i, k, j) != v || at(j, i, k) != v || at(j, k, i) != v ||
                    at(k, i, j) != v || at(k, j, i) != v)
                    return false;
            }
    return true;
}

CubicTensor CubicTensor::operator+(const CubicTensor& o) const {
    if (dim_ != o.dim_) throw input_error("tensor dimensions differ");
    CubicTensor out(dim_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

CubicTensor CubicTensor::scaled(const Rat& c) const {
    CubicTensor out(dim_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

CubicTensor taylor3(const Polynomial& hamiltonian) {
    int dim = hamiltonian.nvars();
    CubicTensor t(dim);
    for (const auto& [m, c] : hamiltonian.terms()) {
        if (std::accumulate(m.begin(), m.end(), 0) != 3) continue;
        std::vector<int> vars;
        for (int v = 0; v < dim; ++v)
            for (int rep = 0; rep < m[v]; ++rep) vars.push_back(v);
        // distinct arrangements of the index multiset
        std::vector<std::vector<int>> arrangements;
        std::vector<int> arr = vars;
        do {
            arrangements.push_back(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
        Rat share = c / static_cast<long>(arrangements.size());
        for (const auto& ijk : arrangements) t.at(ijk[0], ijk[1], ijk[2]) += share;
    }
    return t;
}

Polynomial cubic_polynomial(const CubicTensor& t) {
    Polynomial out(t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k) {
                if (t.at(i, j, k) == 0) continue;
                Polynomial::Monomial m(t.dim(), 0);
                m[i]++;
                m[j]++;
                m[k]++;
                out.add_term(m, t.at(i, j, k));
            }
    return out;
}

namespace {

struct ContractionPlan {
    // per edge: tail dart, head dart (normal form, low-to-high)
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> vertex_darts;
};

ContractionPlan make_plan(const Graph& g, const std::vector<int>& tail_darts,
                          const SymplecticSpace& space, const std::vector<CubicTensor>& tensors) {
    if (!g.is_trivalent()) throw input_error("contraction needs a trivalent graph");
    if (tensors.size() != static_cast<size_t>(g.num_vertices))
        throw input_error("need exactly one cubic tensor per vertex");
    if (tail_darts.size() != static_cast<size_t>(g.num_edges()))
        throw input_error("need one tail dart per edge");
    for (const auto& t : tensors)
        if (t.dim() != space.dim()) throw input_error("tensor dimension does not match the space");
    ContractionPlan plan;
    for (int e = 0; e < g.num_edges(); ++e) {
        int tail = tail_darts[e];
        if (tail / 2 != e) throw input_error("tail dart does not belong to its edge");
        plan.edges.emplace_back(tail, Graph::mate(tail));
    }
    plan.vertex_darts.resize(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) plan.vertex_darts[v] = g.darts_at(v);
    return plan;
}

std::vector<int> normal_tail_darts(const Graph& g) {
    std::vector<int> tails(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges[e];
        tails[e] = (u <= v) ? 2 * e : 2 * e + 1;
    }
    return tails;
}

// DFS over edges; each edge ranges over the 2n nonzero values of
// omega^{-1}. A vertex's tensor entry is multiplied in as soon as its
// third dart gets an index, so zero entries prune the branch.
void contract_rec(const ContractionPlan& plan, const Graph& g,
                  const std::vector<CubicTensor>& tensors, const SymplecticSpace& space,
                  size_t edge, std::vector<int>& dart_index, std::vector<int>& assigned_count,
                  const Rat& partial, Rat& total) {
    if (edge == plan.edges.size()) {
        total += partial;
        return;
    }
    auto [tail, head] = plan.edges[edge];
    for (int k = 0; k < space.n; ++k) {
        for (int dir = 0; dir < 2; ++dir) {
            int ti = (dir == 0) ? k : k + space.n;
            int hi = (dir == 0) ? k + space.n : k;
            int omega = (dir == 0) ? 1 : -1;

            dart_index[tail] = ti;
            dart_index[head] = hi;
            Rat factor = (omega == 1) ? partial : -partial;
            bool dead = false;
            for (int d : {tail, head}) {
                int v = g.dart_vertex(d);
                if (++assigned_count[v] == 3) {
                    const auto& vd = plan.vertex_darts[v];
                    const Rat& entry = tensors[v].at(dart_index[vd[0]], dart_index[vd[1]],
                                                     dart_index[vd[2]]);
                    if (entry == 0) {
                        dead = true;
                    } else {
                        factor *= entry;
                    }
                }
            }
            if (!dead) contract_rec(plan, g, tensors, space, edge + 1, dart_index, assigned_count,
                                    factor, total);
            for (int d : {tail, head}) assigned_count[g.dart_vertex(d)]--;
        }
    }
    dart_index[tail] = -1;
    dart_index[head] = -1;
}

} // namespace

Rat contract_graph_directed(const Graph& g, int sign, const std::vector<int>& tail_darts,
                            const std::vector<CubicTensor>& tensors, const SymplecticSpace& space) {
    ContractionPlan plan = make_plan(g, tail_darts, space, tensors);
    // A zero tensor factors every term; the whole sum must vanish.
    for (const auto& t : tensors)
        if (t.is_zero()) return Rat(0);
    std::vector<int> dart_index(g.num_darts(), -1);
    std::vector<int> assigned(g.num_vertices, 0);
    Rat total(0);
    contract_rec(plan, g, tensors, space, 0, dart_index, assigned, Rat(1), total);
    return total * sign;
}

Rat contract_graph(const Graph& g, const Orientation& orientation,
                   const std::vector<CubicTensor>& tensors, const SymplecticSpace& space) {
    return contract_graph_directed(g, orientation.sign, normal_tail_darts(g), tensors, space);
}

Rat cochain_eval(const Graph& g, const Orientation& orientation,
                 const std::vector<Polynomial>& hamiltonians, const SymplecticSpace& space) {
    std::vector<CubicTensor> tensors;
    tensors.reserve(hamiltonians.size());
    for (const auto& h : hamiltonians) {
        if (h.nvars() != space.dim())
            throw input_error("hamiltonian does not live on the given symplectic space");
        tensors.push_back(taylor3(h));
    }
    int count = static_cast<int>(tensors.size());
    std::vector<int> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total(0);
    do {
        std::vector<CubicTensor> arranged;
        arranged.reserve(count);
        for (int i : perm) arranged.push_back(tensors[i]);
        Rat value = contract_graph(g, orientation, arranged, space);
        total += (permutation_parity(perm) == 1) ? value : -value;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rat cochain_differential_eval(const Graph& g, const Orientation& orientation,
                              const std::vector<Polynomial>& hamiltonians,
                              const SymplecticSpace& space, int truncation) {
    if (hamiltonians.size() != static_cast<size_t>(g.num_vertices) + 1)
        throw input_error("the differential takes one argument more than the graph has vertices");
    for (const auto& h : hamiltonians) {
        if (!is_ham1(h))
            throw input_error("argument of degree < 3: not in the degree-filtered subalgebra");
    }
    std::vector<Polynomial> args;
    args.reserve(hamiltonians.size());
    for (const auto& h : hamiltonians) args.push_back(h.truncated(truncation));

    int count = static_cast<int>(args.size());
    Rat total(0);
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            std::vector<Polynomial> inner;
            inner.reserve(count - 1);
            inner.push_back(poisson_bracket(args[i], args[j], truncation));
            for (int k = 0; k < count; ++k)
                if (k != i && k != j) inner.push_back(args[k]);
            Rat value = cochain_eval(g, orientation, inner, space);
            total += ((i + j) % 2 == 0) ? value : -value;
        }
    }
    return total;
}

CubicTensor sp_action(const Polynomial& quadratic, const CubicTensor& t,
                      const SymplecticSpace& space) {
    if (quadratic.nvars() != space.dim())
        throw input_error("quadratic hamiltonian does not live on the given space");
    if (!quadratic.is_zero() &&
        (quadratic.min_degree() != 2 || quadratic.max_degree() != 2))
        throw input_error("sp_action needs a homogeneous quadratic hamiltonian");
    // {quadratic, cubic} is again cubic, so truncation at 3 is exact.
    return taylor3(poisson_bracket(quadratic, cubic_polynomial(t), 3));
}

Rat sp_invariance_defect(const Graph& g, const Orientation& orientation,
                         const Polynomial& quadratic, const std::vector<CubicTensor>& tensors,
                         const SymplecticSpace& space) {
    Rat total(0);
    for (size_t slot = 0; slot < tensors.size(); ++slot) {
        std::vector<CubicTensor> modified = tensors;
        modified[slot] = sp_action(quadratic, tensors[slot], space);
        total += contract_graph(g, orientation, modified, space);
    }
    return total;
}

} // namespace gw
