#include "CLI11.hpp"

#include "gw/canonical.hpp"
#include "gw/diagram_space.hpp"
#include "gw/errors.hpp"
#include "gw/generate.hpp"
#include "gw/graph.hpp"
#include "gw/graph_complex.hpp"
#include "gw/lie.hpp"
#include "gw/orientation.hpp"
#include "gw/polynomial.hpp"
#include "gw/prng.hpp"
#include "gw/report.hpp"
#include "gw/symplectic.hpp"
#include "gw/util.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace gw;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct AlgebraInput {
    MetrizedLieAlgebra algebra;
    std::string digest;
};

AlgebraInput load_algebra(const std::string& spec_string) {
    AlgebraInput out;
    if (spec_string == "so3") {
        out.algebra = so3_algebra();
        out.digest = fnv1a64_hex("preset:so3");
    } else if (spec_string == "sl2") {
        out.algebra = sl2_algebra();
        out.digest = fnv1a64_hex("preset:sl2");
    } else {
        std::string text = read_file(spec_string);
        out.algebra = parse_algebra(text);
        out.digest = fnv1a64_hex(text);
    }
    return out;
}

struct GraphInput {
    ParsedGraph parsed;
    std::string digest;
};

GraphInput load_graph(const std::string& path) {
    std::string text = read_file(path);
    return {parse_graph(text), fnv1a64_hex(text)};
}

ordered_json matrix_json(const SparseMatrixQ& m, const std::vector<Graph>& cols) {
    std::vector<std::string> names;
    names.reserve(cols.size());
    for (const auto& g : cols) names.push_back(g.serialize());
    return ordered_json::parse(m.to_json(names));
}

// ---- subcommand payloads ----------------------------------------------

ordered_json run_gen(int vertices, bool connected, bool tadpoles) {
    auto classes = generate_trivalent(vertices, connected, tadpoles);
    ordered_json results;
    results["count"] = classes.size();
    results["classes"] = ordered_json::array();
    for (const auto& g : classes) results["classes"].push_back(g.serialize());
    return results;
}

ordered_json run_dims(int vertices, const std::string& relations, bool connected) {
    bool ihx = (relations == "as-ihx");
    DimensionReport report = space_dimension(vertices, ihx, connected);
    ordered_json results;
    results["num_classes"] = report.classes.size();
    results["rank"] = report.rank;
    results["dimension"] = report.dimension;
    results["classes"] = ordered_json::array();
    for (const auto& g : report.classes) results["classes"].push_back(g.serialize());
    if (ihx) {
        results["ihx_sources"] = ordered_json::array();
        for (const auto& g : report.ihx_sources) results["ihx_sources"].push_back(g.serialize());
    }
    results["relation_matrix"] = matrix_json(report.relation_matrix, report.classes);
    return results;
}

ordered_json run_gc_homology(int loops, bool connected) {
    GradedBasis basis = graded_basis(loops, connected);
    auto dims = homology_dims(loops, connected);
    ordered_json results;
    results["basis_sizes"] = ordered_json::object();
    results["differential_ranks"] = ordered_json::object();
    results["homology"] = ordered_json::object();
    for (int v = 1; v <= basis.top_degree(); ++v) {
        std::string key = std::to_string(v);
        results["basis_sizes"][key] = basis.classes.at(v).size();
        results["differential_ranks"][key] = rational_rank(differential_matrix(basis, v));
        results["homology"][key] = dims.at(v);
    }
    return results;
}

ordered_json run_weight(const GraphInput& gin, const AlgebraInput& ain,
                        const std::string& algebra_name) {
    const Graph& g = gin.parsed.graph;
    CyclicData cyclic = gin.parsed.has_cyclic ? gin.parsed.cyclic : default_cyclic(g);
    Rat value = lie_weight(g, cyclic, ain.algebra);
    ordered_json results;
    results["graph"] = g.serialize();
    results["cyclic_orders"] = gin.parsed.has_cyclic ? "document" : "default";
    results["algebra"] = algebra_name;
    results["value"] = rat_to_string(value);
    return results;
}

ordered_json run_ham_cochain(const GraphInput& gin, int n, const std::string& check, int samples,
                             std::uint64_t seed, int degree) {
    const Graph& g = gin.parsed.graph;
    if (!g.is_trivalent()) throw input_error("cochain checks need a trivalent graph");
    SymplecticSpace space{n};
    SplitMix64 rng(seed);

    Rat max_defect(0);
    int nonzero = 0;
    for (int s = 0; s < samples; ++s) {
        Rat defect(0);
        if (check == "cocycle") {
            std::vector<Polynomial> hams;
            for (int i = 0; i < g.num_vertices + 1; ++i)
                hams.push_back(random_ham1(n, 5, degree, rng));
            defect = cochain_differential_eval(g, Orientation{1}, hams, space, degree);
        } else { // sp
            Polynomial x = random_quadratic(n, rng);
            std::vector<CubicTensor> tensors;
            for (int v = 0; v < g.num_vertices; ++v)
                tensors.push_back(taylor3(random_ham1(n, 3, degree, rng)));
            defect = sp_invariance_defect(g, Orientation{1}, x, tensors, space);
        }
        if (defect != 0) nonzero++;
        Rat magnitude = defect < 0 ? Rat(-defect) : defect;
        if (magnitude > max_defect) max_defect = magnitude;
    }

    ordered_json results;
    results["graph"] = g.serialize();
    results["n"] = n;
    results["check"] = check;
    results["samples"] = samples;
    results["degree"] = degree;
    results["max_defect"] = rat_to_string(max_defect);
    results["nonzero_defects"] = nonzero;
    return results;
}

ordered_json run_validate_algebra(const AlgebraInput& ain, const std::string& algebra_name) {
    ValidationReport report = validate_algebra(ain.algebra);
    ordered_json results;
    results["algebra"] = algebra_name;
    results["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json check;
        check["name"] = c.name;
        check["pass"] = c.pass;
        check["witness"] = c.witness;
        results["checks"].push_back(check);
    }
    results["all_pass"] = report.all_pass;
    return results;
}

// ---- report emission ---------------------------------------------------

int emit(const RunManifest& manifest, const std::function<ordered_json()>& compute,
         const std::string& cache_dir, bool pretty) {
    auto start = std::chrono::steady_clock::now();
    ReportCache cache(cache_dir);
    std::string key = manifest.key();

    std::string body;
    bool hit = false;
    if (auto cached = cache.lookup(key)) {
        body = *cached;
        hit = true;
    } else {
        ordered_json report;
        report["manifest"] = manifest.to_json();
        report["results"] = compute();
        body = report.dump();
        cache.store(key, body);
    }

    if (pretty) {
        std::fputs(ordered_json::parse(body).dump(2).c_str(), stdout);
        std::fputc('\n', stdout);
    } else {
        std::fputs(body.c_str(), stdout);
        std::fputc('\n', stdout);
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    std::fprintf(stderr, "[graphweight] %s: cache %s, %.1f ms\n", manifest.command.c_str(),
                 cache.enabled() ? (hit ? "hit" : "miss") : "disabled", ms);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of trivalent graphs: enumeration, graph-complex homology,\n"
                 "symplectic graph cochains, and Lie-algebra weight systems."};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("GRAPHWEIGHT_CACHE_DIR")) cache_dir = env;
    bool pretty = false;
    app.add_option("--cache-dir", cache_dir,
                   "Report cache directory (default: $GRAPHWEIGHT_CACHE_DIR; empty disables)");
    app.add_flag("--pretty", pretty, "Indent the JSON report");

    // gen
    auto* gen = app.add_subcommand("gen", "Enumerate trivalent graphs up to isomorphism");
    int gen_vertices = 2;
    bool gen_all = false, gen_tadpoles = false;
    gen->add_option("--vertices", gen_vertices, "Even vertex count, at most 10")->required();
    gen->add_flag("--all", gen_all, "Include disconnected graphs (default: --connected)");
    gen->add_flag("--connected", [](std::int64_t) {}, "Connected classes only (default)");
    gen->add_flag("--tadpoles", gen_tadpoles, "Allow tadpoles (default: --no-tadpoles)");
    gen->add_flag("--no-tadpoles", [](std::int64_t) {}, "Exclude tadpoles (default)");

    // dims
    auto* dims = app.add_subcommand("dims", "Diagram-space dimension modulo AS or AS+IHX");
    int dims_vertices = 2;
    std::string dims_relations = "as-ihx";
    bool dims_all = false;
    dims->add_option("--vertices", dims_vertices, "Even vertex count, at most 8")->required();
    dims->add_option("--relations", dims_relations, "as | as-ihx (default as-ihx)")
        ->check(CLI::IsMember({"as", "as-ihx"}));
    dims->add_flag("--all", dims_all, "Include disconnected graphs");
    dims->add_flag("--connected", [](std::int64_t) {}, "Connected classes only (default)");

    // gc-homology
    auto* gch = app.add_subcommand("gc-homology", "Graph-complex homology at fixed loop order");
    int gch_loops = 2;
    bool gch_all = false;
    gch->add_option("--loops", gch_loops, "Loop order, 2..4")->required();
    gch->add_flag("--all", gch_all, "Include disconnected graphs");
    gch->add_flag("--connected", [](std::int64_t) {}, "Connected classes only (default)");

    // weight
    auto* weight = app.add_subcommand("weight", "Metrized-Lie-algebra weight of a graph");
    std::string weight_graph, weight_algebra = "so3";
    weight->add_option("--graph", weight_graph, "Graph document (JSON)")->required();
    weight->add_option("--algebra", weight_algebra, "so3 | sl2 | path to an algebra document");

    // ham-cochain
    auto* ham = app.add_subcommand("ham-cochain", "Seeded symplectic cochain checks");
    std::string ham_graph, ham_check = "cocycle";
    int ham_n = 1, ham_samples = 50, ham_degree = 7;
    std::uint64_t ham_seed = 0;
    ham->add_option("--graph", ham_graph, "Graph document (JSON)")->required();
    ham->add_option("--n", ham_n, "Half-dimension of the symplectic space")->check(CLI::Range(1, 3));
    ham->add_option("--check", ham_check, "cocycle | sp")->check(CLI::IsMember({"cocycle", "sp"}));
    ham->add_option("--samples", ham_samples, "Number of seeded random samples");
    ham->add_option("--seed", ham_seed, "PRNG seed (SplitMix64)");
    ham->add_option("--degree", ham_degree, "Truncation degree (default 7)");

    // validate-algebra
    auto* va = app.add_subcommand("validate-algebra", "Check the axioms of an algebra document");
    std::string va_algebra;
    va->add_option("--algebra", va_algebra, "so3 | sl2 | path to an algebra document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            RunManifest m;
            m.command = "gen";
            m.parameters["vertices"] = gen_vertices;
            m.parameters["connected"] = !gen_all;
            m.parameters["tadpoles"] = gen_tadpoles;
            return emit(m, [&] { return run_gen(gen_vertices, !gen_all, gen_tadpoles); }, cache_dir,
                        pretty);
        }
        if (dims->parsed()) {
            RunManifest m;
            m.command = "dims";
            m.parameters["vertices"] = dims_vertices;
            m.parameters["relations"] = dims_relations;
            m.parameters["connected"] = !dims_all;
            return emit(m, [&] { return run_dims(dims_vertices, dims_relations, !dims_all); },
                        cache_dir, pretty);
        }
        if (gch->parsed()) {
            RunManifest m;
            m.command = "gc-homology";
            m.parameters["loops"] = gch_loops;
            m.parameters["connected"] = !gch_all;
            return emit(m, [&] { return run_gc_homology(gch_loops, !gch_all); }, cache_dir, pretty);
        }
        if (weight->parsed()) {
            GraphInput gin = load_graph(weight_graph);
            AlgebraInput ain = load_algebra(weight_algebra);
            RunManifest m;
            m.command = "weight";
            m.parameters["graph"] = weight_graph;
            m.parameters["algebra"] = weight_algebra;
            m.input_digests["graph"] = gin.digest;
            m.input_digests["algebra"] = ain.digest;
            return emit(m, [&] { return run_weight(gin, ain, weight_algebra); }, cache_dir, pretty);
        }
        if (ham->parsed()) {
            GraphInput gin = load_graph(ham_graph);
            RunManifest m;
            m.command = "ham-cochain";
            m.parameters["graph"] = ham_graph;
            m.parameters["n"] = ham_n;
            m.parameters["check"] = ham_check;
            m.parameters["samples"] = ham_samples;
            m.parameters["degree"] = ham_degree;
            m.seed = ham_seed;
            m.input_digests["graph"] = gin.digest;
            return emit(m,
                        [&] {
                            return run_ham_cochain(gin, ham_n, ham_check, ham_samples, ham_seed,
                                                   ham_degree);
                        },
                        cache_dir, pretty);
        }
        if (va->parsed()) {
            AlgebraInput ain = load_algebra(va_algebra);
            RunManifest m;
            m.command = "validate-algebra";
            m.parameters["algebra"] = va_algebra;
            m.input_digests["algebra"] = ain.digest;
            return emit(m, [&] { return run_validate_algebra(ain, va_algebra); }, cache_dir, pretty);
        }
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal invariant violation: %s\n", e.what());
        return 2;
    } catch (const input_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
