#pragma once

#include "gw/graph.hpp"
#include "gw/orientation.hpp"
#include "gw/rational.hpp"

#include <map>
#include <string>

namespace gw {

/// Formal rational combination of canonical oriented graphs. Keys are
/// canonical serializations; the coefficient is stored relative to the
/// positive normal-form orientation of the canonical representative.
/// Graphs with an orientation-reversing automorphism never appear.
class GraphVector {
public:
    struct Term {
        Graph graph;
        Rat coeff;
    };

    GraphVector() = default;

    /// Adds coeff * (g, orientation): canonicalizes, transports the sign
    /// along the relabeling, drops zero classes, merges like terms.
    void add_term(const Graph& g, const Orientation& orientation, const Rat& coeff);

    void add(const GraphVector& other);
    void scale(const Rat& factor);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<std::string, Term>& terms() const { return terms_; }
    /// Coefficient of the canonical class with the given serialization
    /// (zero if absent).
    Rat coefficient(const std::string& serialization) const;

    bool operator==(const GraphVector& other) const;

private:
    std::map<std::string, Term> terms_;
};

} // namespace gw
