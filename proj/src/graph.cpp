#include "gw/graph.hpp"

#include "gw/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gw {

std::vector<int> Graph::valences() const {
    std::vector<int> val(num_vertices, 0);
    for (const auto& [u, v] : edges) {
        val[u]++;
        val[v]++;
    }
    return val;
}

std::vector<int> Graph::darts_at(int v) const {
    std::vector<int> out;
    for (int d = 0; d < num_darts(); ++d)
        if (dart_vertex(d) == v) out.push_back(d);
    return out;
}

bool Graph::is_trivalent() const {
    auto val = valences();
    return std::all_of(val.begin(), val.end(), [](int x) { return x == 3; });
}

bool Graph::has_tadpole() const {
    return std::any_of(edges.begin(), edges.end(),
                       [](const auto& e) { return e.first == e.second; });
}

bool Graph::is_connected() const {
    if (num_vertices == 0) return true;
    std::vector<bool> seen(num_vertices, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
            int w = -1;
            if (a == v && !seen[b]) w = b;
            else if (b == v && !seen[a]) w = a;
            if (w >= 0) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

int Graph::loop_order() const {
    std::vector<int> parent(num_vertices);
    for (int i = 0; i < num_vertices; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = num_vertices;
    for (const auto& [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            components--;
        }
    }
    return num_edges() - num_vertices + components;
}

std::vector<std::vector<int>> Graph::multiplicity_matrix() const {
    std::vector<std::vector<int>> m(num_vertices, std::vector<int>(num_vertices, 0));
    for (const auto& [u, v] : edges) {
        if (u == v) {
            m[u][u]++;
        } else {
            m[u][v]++;
            m[v][u]++;
        }
    }
    return m;
}

std::string Graph::serialize() const {
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (const auto& [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << "V=" << num_vertices << ";E=";
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << ",";
        os << sorted[i].first << "-" << sorted[i].second;
    }
    return os.str();
}

ParsedGraph parse_graph(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("graph document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw input_error("graph document must be an object with 'vertices' and 'edges'");
    if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 0)
        throw input_error("'vertices' must be a non-negative integer");

    ParsedGraph out;
    out.graph.num_vertices = doc["vertices"].get<int>();
    if (!doc["edges"].is_array()) throw input_error("'edges' must be an array of [u,v] pairs");
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw input_error("each edge must be an [u,v] integer pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || u >= out.graph.num_vertices || v < 0 || v >= out.graph.num_vertices)
            throw input_error("edge endpoint out of range: [" + std::to_string(u) + "," +
                              std::to_string(v) + "]");
        out.graph.edges.emplace_back(u, v);
    }

    if (doc.contains("cyclic_orders")) {
        if (!doc["cyclic_orders"].is_object())
            throw input_error("'cyclic_orders' must map vertex strings to edge index arrays");
        const Graph& g = out.graph;
        out.has_cyclic = true;
        out.cyclic.orders.assign(g.num_vertices, {});
        for (auto it = doc["cyclic_orders"].begin(); it != doc["cyclic_orders"].end(); ++it) {
            int v;
            try {
                size_t pos = 0;
                v = std::stoi(it.key(), &pos);
                if (pos != it.key().size()) throw std::invalid_argument("");
            } catch (...) {
                throw input_error("cyclic_orders key is not a vertex index: '" + it.key() + "'");
            }
            if (v < 0 || v >= g.num_vertices)
                throw input_error("cyclic_orders vertex out of range: " + std::to_string(v));
            if (!it.value().is_array())
                throw input_error("cyclic order at vertex " + std::to_string(v) + " must be an array");
            // Translate edge indices to darts; a tadpole edge is listed
            // twice, first occurrence = dart 2e, second = dart 2e+1.
            std::vector<int> darts;
            std::map<int, int> seen_count;
            for (const auto& je : it.value()) {
                if (!je.is_number_integer())
                    throw input_error("cyclic order entries must be edge indices");
                int e = je.get<int>();
                if (e < 0 || e >= g.num_edges())
                    throw input_error("cyclic order edge index out of range: " + std::to_string(e));
                int cnt = seen_count[e]++;
                auto [a, b] = g.edges[e];
                int dart;
                if (a == v && b == v) {
                    if (cnt > 1)
                        throw input_error("tadpole edge " + std::to_string(e) +
                                          " listed more than twice at vertex " + std::to_string(v));
                    dart = 2 * e + cnt;
                } else if (a == v) {
                    if (cnt > 0)
                        throw input_error("edge " + std::to_string(e) +
                                          " listed more than once at vertex " + std::to_string(v));
                    dart = 2 * e;
                } else if (b == v) {
                    if (cnt > 0)
                        throw input_error("edge " + std::to_string(e) +
                                          " listed more than once at vertex " + std::to_string(v));
                    dart = 2 * e + 1;
                } else {
                    throw input_error("edge " + std::to_string(e) + " is not incident to vertex " +
                                      std::to_string(v));
                }
                darts.push_back(dart);
            }
            out.cyclic.orders[v] = darts;
        }
        // Every vertex with incident darts must carry a complete order.
        auto val = g.valences();
        for (int v = 0; v < g.num_vertices; ++v) {
            if (static_cast<int>(out.cyclic.orders[v].size()) != val[v])
                throw input_error("cyclic order at vertex " + std::to_string(v) + " lists " +
                                  std::to_string(out.cyclic.orders[v].size()) + " darts, valence is " +
                                  std::to_string(val[v]));
        }
    }
    return out;
}

Graph make_graph(int vertices, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.num_vertices = vertices;
    g.edges = std::move(edges);
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || u >= vertices || v < 0 || v >= vertices)
            throw input_error("edge endpoint out of range in make_graph");
    }
    return g;
}

Graph theta_graph() { return make_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Graph k4_graph() {
    return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace gw
