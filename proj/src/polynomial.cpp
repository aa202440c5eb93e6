#include "gw/polynomial.hpp"

#include "gw/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace gw {

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw input_error("monomial has wrong arity");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

Polynomial Polynomial::partial_derivative(int var) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var]--;
        out.add_term(d, c * m[var]);
    }
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) <= max_degree) out.add_term(m, c);
    }
    return out;
}

Polynomial Polynomial::degree_part(int degree) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) == degree) out.add_term(m, c);
    }
    return out;
}

int Polynomial::min_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int Polynomial::max_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (d > best) best = d;
    }
    return best;
}

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, int truncation) {
    if (f.nvars() != g.nvars()) throw input_error("bracket arguments live in different spaces");
    if (f.nvars() % 2 != 0) throw input_error("bracket needs an even number of variables");
    int n = f.nvars() / 2;
    Polynomial out(f.nvars());
    for (int i = 0; i < n; ++i) {
        out = out + f.partial_derivative(i) * g.partial_derivative(n + i);
        out = out - f.partial_derivative(n + i) * g.partial_derivative(i);
    }
    return out.truncated(truncation);
}

bool is_ham1(const Polynomial& p) { return p.is_zero() || p.min_degree() >= 3; }

ParsedHamiltonian parse_hamiltonian(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("hamiltonian document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms"))
        throw input_error("hamiltonian document must be an object with 'n' and 'terms'");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() <= 0)
        throw input_error("'n' must be a positive integer");

    ParsedHamiltonian out;
    out.n = doc["n"].get<int>();
    out.poly = Polynomial(2 * out.n);
    if (!doc["terms"].is_array()) throw input_error("'terms' must be an array");
    for (const auto& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff"))
            throw input_error("each term needs 'monomial' and 'coeff'");
        if (!t["monomial"].is_array() || t["monomial"].size() != static_cast<size_t>(2 * out.n))
            throw input_error("monomial must list one exponent per variable (2n entries)");
        Polynomial::Monomial m;
        for (const auto& e : t["monomial"]) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw input_error("exponents must be non-negative integers");
            m.push_back(e.get<int>());
        }
        if (!t["coeff"].is_string()) throw input_error("'coeff' must be a \"num/den\" string");
        out.poly.add_term(m, rat_from_string(t["coeff"].get<std::string>()));
    }
    return out;
}

Polynomial random_ham1(int n, int max_degree, int truncation, SplitMix64& rng) {
    int top = std::min(max_degree, truncation);
    Polynomial out(2 * n);
    for (int degree = 3; degree <= top; ++degree) {
        long long count = rng.int_in(1, 3);
        for (long long t = 0; t < count; ++t) {
            Polynomial::Monomial m(2 * n, 0);
            for (int s = 0; s < degree; ++s) m[rng.below(static_cast<std::uint64_t>(2 * n))]++;
            out.add_term(m, rng.rational(9, 3));
        }
    }
    if (out.is_zero()) {
        Polynomial::Monomial m(2 * n, 0);
        m[0] = 3;
        out.add_term(m, Rat(1));
    }
    return out;
}

Polynomial random_quadratic(int n, SplitMix64& rng) {
    Polynomial out(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i; j < 2 * n; ++j) {
            if (rng.below(2) == 0) continue;
            Polynomial::Monomial m(2 * n, 0);
            m[i]++;
            m[j]++;
            out.add_term(m, rng.rational(5, 2));
        }
    }
    return out;
}

} // namespace gw
