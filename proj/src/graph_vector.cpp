#include "gw/graph_vector.hpp"

#include "gw/canonical.hpp"

namespace gw {

void GraphVector::add_term(const Graph& g, const Orientation& orientation, const Rat& coeff) {
    if (coeff == 0) return;
    CanonicalForm cf = canonical_form(g);
    if (has_orientation_reversing_automorphism(cf.graph)) return;
    Rat c = coeff * (orientation.sign * cf.orientation_sign);
    std::string key = cf.graph.serialize();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{cf.graph, std::move(c)});
    } else {
        it->second.coeff += c;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

void GraphVector::add(const GraphVector& other) {
    for (const auto& [key, term] : other.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, term);
        } else {
            it->second.coeff += term.coeff;
            if (it->second.coeff == 0) terms_.erase(it);
        }
    }
}

void GraphVector::scale(const Rat& factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [key, term] : terms_) term.coeff *= factor;
}

Rat GraphVector::coefficient(const std::string& serialization) const {
    auto it = terms_.find(serialization);
    return it == terms_.end() ? Rat(0) : it->second.coeff;
}

bool GraphVector::operator==(const GraphVector& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
    }
    return true;
}

} // namespace gw
