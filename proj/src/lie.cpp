#include "gw/lie.hpp"

#include "gw/errors.hpp"
#include "gw/linalg.hpp"
#include "gw/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gw {

namespace {

std::string tuple_witness(std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << ")";
    return os.str();
}

void derive(MetrizedLieAlgebra& a) {
    int d = a.dim;
    a.lowered.assign(d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, Rat(0))));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int c = 0; c < d; ++c) {
                Rat sum(0);
                for (int e = 0; e < d; ++e) sum += a.structure[x][y][e] * a.metric[e][c];
                a.lowered[x][y][c] = sum;
            }

    // Exact inverse by Gauss-Jordan. A degenerate metric leaves
    // metric_inverse empty; validation reports it and the weight maps
    // refuse to run.
    std::vector<std::vector<Rat>> m = a.metric;
    std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) inv[i][i] = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            a.metric_inverse.clear();
            return;
        }
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat lead = m[col][col];
        for (int j = 0; j < d; ++j) {
            m[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < d; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    a.metric_inverse = std::move(inv);
}

void require_valid(const MetrizedLieAlgebra& a) {
    if (a.validation_cache == 0) {
        ValidationReport report = validate_algebra(a);
        a.validation_cache = report.all_pass ? 1 : -1;
        if (!report.all_pass) {
            for (const auto& c : report.checks)
                if (!c.pass)
                    throw input_error("algebra '" + a.name + "' failed validation: " + c.name +
                                      " at " + c.witness);
        }
    } else if (a.validation_cache < 0) {
        throw input_error("algebra '" + a.name + "' failed validation");
    }
}

} // namespace

ValidationReport validate_algebra(const MetrizedLieAlgebra& a) {
    ValidationReport report;
    int d = a.dim;

    ValidationCheck antisym{"structure_antisymmetry", true, ""};
    for (int x = 0; x < d && antisym.pass; ++x)
        for (int y = 0; y < d && antisym.pass; ++y)
            for (int c = 0; c < d && antisym.pass; ++c)
                if (a.structure[x][y][c] != -a.structure[y][x][c]) {
                    antisym.pass = false;
                    antisym.witness = tuple_witness({x, y, c});
                }
    report.checks.push_back(antisym);

    ValidationCheck jacobi{"jacobi_identity", true, ""};
    for (int x = 0; x < d && jacobi.pass; ++x)
        for (int y = 0; y < d && jacobi.pass; ++y)
            for (int z = 0; z < d && jacobi.pass; ++z)
                for (int e = 0; e < d && jacobi.pass; ++e) {
                    Rat sum(0);
                    for (int w = 0; w < d; ++w) {
                        sum += a.structure[x][y][w] * a.structure[w][z][e];
                        sum += a.structure[y][z][w] * a.structure[w][x][e];
                        sum += a.structure[z][x][w] * a.structure[w][y][e];
                    }
                    if (sum != 0) {
                        jacobi.pass = false;
                        jacobi.witness = tuple_witness({x, y, z, e});
                    }
                }
    report.checks.push_back(jacobi);

    ValidationCheck sym{"metric_symmetry", true, ""};
    for (int x = 0; x < d && sym.pass; ++x)
        for (int y = 0; y < d && sym.pass; ++y)
            if (a.metric[x][y] != a.metric[y][x]) {
                sym.pass = false;
                sym.witness = tuple_witness({x, y});
            }
    report.checks.push_back(sym);

    ValidationCheck nondeg{"metric_nondegenerate", true, ""};
    {
        SparseMatrixQ m(d, d);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) m.add(x, y, a.metric[x][y]);
        if (rational_rank(m) != d) {
            nondeg.pass = false;
            nondeg.witness = "rank < dim";
        }
    }
    report.checks.push_back(nondeg);

    ValidationCheck inv{"ad_invariance", true, ""};
    for (int x = 0; x < d && inv.pass; ++x)
        for (int y = 0; y < d && inv.pass; ++y)
            for (int c = 0; c < d && inv.pass; ++c)
                if (a.lowered[x][y][c] != -a.lowered[x][c][y]) {
                    inv.pass = false;
                    inv.witness = tuple_witness({x, y, c});
                }
    report.checks.push_back(inv);

    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const ValidationCheck& c) { return c.pass; });
    return report;
}

MetrizedLieAlgebra so3_algebra() {
    MetrizedLieAlgebra a;
    a.dim = 3;
    a.name = "so3";
    a.structure.assign(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    const int eps[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                           {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
    for (const auto& e : eps) a.structure[e[0]][e[1]][e[2]] = Rat(e[3]);
    a.metric.assign(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) a.metric[i][i] = 1;
    derive(a);
    return a;
}

MetrizedLieAlgebra sl2_algebra() {
    MetrizedLieAlgebra a;
    a.dim = 3;
    a.name = "sl2";
    a.structure.assign(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    // basis order h=0, e=1, f=2
    a.structure[0][1][1] = 2;
    a.structure[1][0][1] = -2;
    a.structure[0][2][2] = -2;
    a.structure[2][0][2] = 2;
    a.structure[1][2][0] = 1;
    a.structure[2][1][0] = -1;
    a.metric.assign(3, std::vector<Rat>(3, Rat(0)));
    a.metric[0][0] = 2; // tr(h h)
    a.metric[1][2] = 1; // tr(e f)
    a.metric[2][1] = 1;
    derive(a);
    return a;
}

MetrizedLieAlgebra parse_algebra(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("algebra document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("structure") ||
        !doc.contains("metric"))
        throw input_error("algebra document needs 'dim', 'structure', 'metric'");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() <= 0)
        throw input_error("'dim' must be a positive integer");

    MetrizedLieAlgebra a;
    a.dim = doc["dim"].get<int>();
    a.name = "doc:" + fnv1a64_hex(json_text);
    a.structure.assign(a.dim, std::vector<std::vector<Rat>>(a.dim, std::vector<Rat>(a.dim, Rat(0))));
    a.metric.assign(a.dim, std::vector<Rat>(a.dim, Rat(0)));

    auto check_index = [&](const nlohmann::json& j) {
        if (!j.is_number_integer() || j.get<int>() < 0 || j.get<int>() >= a.dim)
            throw input_error("algebra index out of range");
        return j.get<int>();
    };
    if (!doc["structure"].is_array()) throw input_error("'structure' must be an array");
    for (const auto& entry : doc["structure"]) {
        if (!entry.is_array() || entry.size() != 4 || !entry[3].is_string())
            throw input_error("structure entries are [a, b, c, \"num/den\"]");
        int x = check_index(entry[0]), y = check_index(entry[1]), c = check_index(entry[2]);
        a.structure[x][y][c] = rat_from_string(entry[3].get<std::string>());
    }
    if (!doc["metric"].is_array()) throw input_error("'metric' must be an array");
    for (const auto& entry : doc["metric"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[2].is_string())
            throw input_error("metric entries are [a, b, \"num/den\"]");
        int x = check_index(entry[0]), y = check_index(entry[1]);
        a.metric[x][y] = rat_from_string(entry[2].get<std::string>());
    }
    derive(a);
    return a;
}

namespace {

// DFS over edges with an index pair per edge, weighted by the inverse
// metric; a vertex's lowered tensor entry is multiplied in when its last
// dart is assigned, so zero entries prune the branch.
void weight_rec(const Graph& g, const CyclicData& cyclic, const MetrizedLieAlgebra& a, size_t edge,
                std::vector<int>& dart_index, std::vector<int>& assigned, const Rat& partial,
                Rat& total) {
    if (edge == static_cast<size_t>(g.num_edges())) {
        total += partial;
        return;
    }
    int d1 = static_cast<int>(2 * edge), d2 = static_cast<int>(2 * edge + 1);
    for (int x = 0; x < a.dim; ++x) {
        for (int y = 0; y < a.dim; ++y) {
            const Rat& w = a.metric_inverse[x][y];
            if (w == 0) continue;
            dart_index[d1] = x;
            dart_index[d2] = y;
            Rat factor = partial * w;
            bool dead = false;
            for (int d : {d1, d2}) {
                int v = g.dart_vertex(d);
                if (++assigned[v] == 3) {
                    const auto& ord = cyclic.orders[v];
                    const Rat& entry =
                        a.lowered[dart_index[ord[0]]][dart_index[ord[1]]][dart_index[ord[2]]];
                    if (entry == 0)
                        dead = true;
                    else
                        factor *= entry;
                }
            }
            if (!dead)
                weight_rec(g, cyclic, a, edge + 1, dart_index, assigned, factor, total);
            for (int d : {d1, d2}) assigned[g.dart_vertex(d)]--;
        }
    }
}

} // namespace

Rat lie_weight(const Graph& g, const CyclicData& cyclic, const MetrizedLieAlgebra& algebra) {
    require_valid(algebra);
    if (!g.is_trivalent()) throw input_error("weight systems need a trivalent graph");
    if (static_cast<int>(cyclic.orders.size()) != g.num_vertices)
        throw input_error("cyclic data is missing");
    for (int v = 0; v < g.num_vertices; ++v) {
        auto sorted = cyclic.orders[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.darts_at(v))
            throw input_error("cyclic data at vertex " + std::to_string(v) + " is incomplete");
    }
    std::vector<int> dart_index(g.num_darts(), -1);
    std::vector<int> assigned(g.num_vertices, 0);
    Rat total(0);
    weight_rec(g, cyclic, algebra, 0, dart_index, assigned, Rat(1), total);
    return total;
}

Rat lie_weight_vector(const GraphVector& v, const MetrizedLieAlgebra& algebra) {
    Rat total(0);
    for (const auto& [key, term] : v.terms()) {
        CyclicData reference = default_cyclic(term.graph);
        int dictionary = orientation_from_cyclic(term.graph, reference).sign;
        total += term.coeff * dictionary * lie_weight(term.graph, reference, algebra);
    }
    return total;
}

} // namespace gw
