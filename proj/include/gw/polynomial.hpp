#pragma once

#include "gw/prng.hpp"
#include "gw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gw {

/// Sparse polynomial in a fixed number of variables over the rationals.
/// Keys are exponent vectors; the map order makes every iteration (and so
/// every report) deterministic.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rat& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;

    Polynomial partial_derivative(int var) const;
    /// Drops every term of total degree > max_degree.
    Polynomial truncated(int max_degree) const;
    /// The homogeneous piece of the given degree.
    Polynomial degree_part(int degree) const;

    /// Smallest/largest total degree among nonzero terms; -1 when zero.
    int min_degree() const;
    int max_degree() const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;
};

/// {f,g} = sum_i (df/dp_i dg/dq_i - df/dq_i dg/dp_i), truncated to total
/// degree <= truncation. Variables are ordered p_1..p_n, q_1..q_n, so both
/// arguments live in 2n variables.
Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, int truncation);

/// True iff every nonzero term has total degree >= 3 (lies in the
/// subalgebra of Hamiltonians vanishing to second order).
bool is_ham1(const Polynomial& p);

/// Parses {"n": int, "terms": [{"monomial": [exponents, length 2n],
/// "coeff": "num/den"}, ...]}.
struct ParsedHamiltonian {
    int n = 0;
    Polynomial poly{0};
};
ParsedHamiltonian parse_hamiltonian(const std::string& json_text);

/// Seeded random element of Ham^1: for each degree 3..max_degree a few
/// monomials with small rational coefficients. max_degree is clamped to
/// the truncation order.
Polynomial random_ham1(int n, int max_degree, int truncation, SplitMix64& rng);

/// Random quadratic Hamiltonian (symmetric coefficient array).
Polynomial random_quadratic(int n, SplitMix64& rng);

} // namespace gw
