#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gw/canonical.hpp"
#include "gw/errors.hpp"
#include "gw/generate.hpp"
#include "gw/graph.hpp"
#include "gw/graph_vector.hpp"
#include "gw/orientation.hpp"
#include "gw/prng.hpp"
#include "gw/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

using namespace gw;

namespace {

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(p[i], p[j]);
    }
    return p;
}

// Independent generation oracle: every perfect matching of 3V fixed darts
// (vertex v owns darts 3v, 3v+1, 3v+2) gives a trivalent graph; classes are
// collected by canonical serialization.
void pairing_oracle_rec(std::vector<int>& mate, std::set<std::string>& classes, bool connected_only,
                        bool allow_tadpoles) {
    int n = static_cast<int>(mate.size());
    int first = -1;
    for (int d = 0; d < n; ++d)
        if (mate[d] < 0) {
            first = d;
            break;
        }
    if (first < 0) {
        Graph g;
        g.num_vertices = n / 3;
        for (int d = 0; d < n; ++d)
            if (mate[d] > d) g.edges.emplace_back(d / 3, mate[d] / 3);
        if (!allow_tadpoles && g.has_tadpole()) return;
        if (connected_only && !g.is_connected()) return;
        classes.insert(canonical_form(g).graph.serialize());
        return;
    }
    for (int d = first + 1; d < n; ++d) {
        if (mate[d] >= 0) continue;
        mate[first] = d;
        mate[d] = first;
        pairing_oracle_rec(mate, classes, connected_only, allow_tadpoles);
        mate[first] = -1;
        mate[d] = -1;
    }
}

std::set<std::string> pairing_oracle(int vertices, bool connected_only, bool allow_tadpoles) {
    std::vector<int> mate(3 * vertices, -1);
    std::set<std::string> classes;
    pairing_oracle_rec(mate, classes, connected_only, allow_tadpoles);
    return classes;
}

// Dart-level automorphism oracle: all permutations of darts commuting with
// the edge pairing and inducing a vertex bijection. Only usable for tiny
// graphs.
int dart_brute_force_aut_order(const Graph& g) {
    int n = g.num_darts();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int count = 0;
    do {
        bool ok = true;
        for (int d = 0; ok && d < n; ++d)
            if (perm[Graph::mate(d)] != Graph::mate(perm[d])) ok = false;
        if (ok) {
            std::vector<int> vmap(g.num_vertices, -1);
            for (int d = 0; ok && d < n; ++d) {
                int from = g.dart_vertex(d), to = g.dart_vertex(perm[d]);
                if (vmap[from] < 0)
                    vmap[from] = to;
                else if (vmap[from] != to)
                    ok = false;
            }
            if (ok) {
                std::set<int> image(vmap.begin(), vmap.end());
                ok = static_cast<int>(image.size()) == g.num_vertices;
            }
        }
        if (ok) count++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Graph doubled_square() {
    return make_graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {0, 3}});
}

} // namespace

TEST_CASE("parse_graph reads the document format") {
    auto pg = parse_graph(R"({"vertices":2,"edges":[[0,1],[0,1],[0,1]]})");
    CHECK(pg.graph.num_vertices == 2);
    CHECK(pg.graph.num_edges() == 3);
    CHECK(pg.graph.serialize() == "V=2;E=0-1,0-1,0-1");
    CHECK(!pg.has_cyclic);

    auto tad = parse_graph(R"({"vertices":1,"edges":[[0,0]]})");
    CHECK(tad.graph.has_tadpole());
    CHECK(tad.graph.valences() == std::vector<int>{2});

    CHECK_THROWS_AS(parse_graph(R"({"vertices":2,"edges":[[0,2]]})"), input_error);
    CHECK_THROWS_AS(parse_graph("not json"), input_error);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":2})"), input_error);
}

TEST_CASE("parse_graph attaches cyclic orders") {
    auto pg = parse_graph(
        R"({"vertices":2,"edges":[[0,1],[0,1],[0,1]],"cyclic_orders":{"0":[0,1,2],"1":[0,2,1]}})");
    REQUIRE(pg.has_cyclic);
    CHECK(pg.cyclic.orders[0] == std::vector<int>{0, 2, 4});
    CHECK(pg.cyclic.orders[1] == std::vector<int>{1, 5, 3});

    // tadpole edge listed twice
    auto tad = parse_graph(R"({"vertices":1,"edges":[[0,0]],"cyclic_orders":{"0":[0,0]}})");
    CHECK(tad.cyclic.orders[0] == std::vector<int>{0, 1});

    // valence mismatch
    CHECK_THROWS_AS(
        parse_graph(R"({"vertices":2,"edges":[[0,1],[0,1],[0,1]],"cyclic_orders":{"0":[0,1]}})"),
        input_error);
    // wrong incidence
    CHECK_THROWS_AS(parse_graph(R"({"vertices":3,"edges":[[0,1],[1,2]],"cyclic_orders":{"0":[1]}})"),
                    input_error);
}

TEST_CASE("canonical form is relabeling-invariant and idempotent") {
    Graph k4 = k4_graph();
    std::vector<int> naming = {3, 1, 0, 2};
    Relabeled renamed = relabel_graph(k4, naming);
    CHECK(canonical_form(renamed.graph).graph.serialize() == canonical_form(k4).graph.serialize());

    Graph theta = theta_graph();
    CHECK(canonical_form(theta).graph.serialize() == "V=2;E=0-1,0-1,0-1");

    // disjoint union of two thetas, components swapped
    Graph tt1 = make_graph(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
    Graph tt2 = make_graph(4, {{2, 3}, {2, 3}, {2, 3}, {0, 1}, {0, 1}, {0, 1}});
    CHECK(canonical_form(tt1).graph.serialize() == canonical_form(tt2).graph.serialize());

    SplitMix64 rng(20250811);
    std::vector<Graph> pool = {tt1};
    for (int vertices : {2, 4, 6})
        for (bool tadpoles : {false, true})
            for (const auto& g : generate_trivalent(vertices, true, tadpoles)) pool.push_back(g);
    for (const auto& g : pool) {
        CanonicalForm cf = canonical_form(g);
        CanonicalForm again = canonical_form(cf.graph);
        CHECK(again.graph.serialize() == cf.graph.serialize());
        for (int trial = 0; trial < 200; ++trial) {
            auto perm = random_permutation(g.num_vertices, rng);
            Relabeled r = relabel_graph(g, perm);
            CHECK(canonical_form(r.graph).graph.serialize() == cf.graph.serialize());
        }
    }
}

TEST_CASE("canonical serialization is minimal over all relabelings") {
    SplitMix64 rng(5557);
    std::vector<Graph> pool = {
        theta_graph(),
        k4_graph(),
        make_graph(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}}), // mixed degrees (4,3,3)
        make_graph(2, {{0, 0}, {0, 1}, {1, 1}}),                 // dumbbell
        make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), // degrees (3,2,3,2)
    };
    for (int trial = 0; trial < 40; ++trial) {
        int vertices = static_cast<int>(rng.int_in(2, 5));
        int edges = static_cast<int>(rng.int_in(1, 6));
        Graph g;
        g.num_vertices = vertices;
        for (int e = 0; e < edges; ++e)
            g.edges.emplace_back(static_cast<int>(rng.below(vertices)),
                                 static_cast<int>(rng.below(vertices)));
        pool.push_back(g);
    }
    for (const auto& g : pool) {
        std::vector<int> perm(g.num_vertices);
        for (int i = 0; i < g.num_vertices; ++i) perm[i] = i;
        std::string minimum = g.serialize();
        std::vector<int> sorted = perm;
        do {
            std::string s = relabel_graph(g, sorted).graph.serialize();
            if (s < minimum) minimum = s;
        } while (std::next_permutation(sorted.begin(), sorted.end()));
        CHECK(canonical_form(g).graph.serialize() == minimum);
        CHECK(is_canonical_labeling(g) == (g.serialize() == minimum));
    }
}

TEST_CASE("automorphism groups at desk scale") {
    auto theta_auts = automorphisms(theta_graph());
    CHECK(theta_auts.size() == 12);
    CHECK(dart_brute_force_aut_order(theta_graph()) == 12);

    CHECK(automorphisms(k4_graph()).size() == 24);

    Graph tadpole = make_graph(1, {{0, 0}});
    CHECK(automorphisms(tadpole).size() == 2);
    CHECK(dart_brute_force_aut_order(tadpole) == 2);

    // group axioms: closure and inverses, as dart permutations
    for (const auto& g : {theta_graph(), doubled_square(), k4_graph()}) {
        auto auts = automorphisms(g);
        std::set<std::vector<int>> dart_perms;
        for (const auto& a : auts) dart_perms.insert(a.dart_perm);
        CHECK(dart_perms.size() == auts.size());
        for (const auto& a : auts) {
            for (const auto& b : auts) {
                std::vector<int> comp(a.dart_perm.size());
                for (size_t d = 0; d < comp.size(); ++d)
                    comp[d] = a.dart_perm[b.dart_perm[d]];
                CHECK(dart_perms.count(comp) == 1);
            }
            std::vector<int> inv(a.dart_perm.size());
            for (size_t d = 0; d < inv.size(); ++d) inv[a.dart_perm[d]] = static_cast<int>(d);
            CHECK(dart_perms.count(inv) == 1);
        }
    }
}

TEST_CASE("orientation reversal detection") {
    CHECK(!has_orientation_reversing_automorphism(theta_graph()));
    CHECK(!has_orientation_reversing_automorphism(k4_graph()));
    CHECK(!has_orientation_reversing_automorphism(doubled_square()));
    CHECK(has_orientation_reversing_automorphism(make_graph(1, {{0, 0}})));
    // dumbbell: loop reversal fixes the graph and reverses one edge
    CHECK(has_orientation_reversing_automorphism(make_graph(2, {{0, 0}, {0, 1}, {1, 1}})));

    // consistency with the dart-level signs
    for (const auto& g : {theta_graph(), k4_graph(), doubled_square(),
                          make_graph(2, {{0, 0}, {0, 1}, {1, 1}})}) {
        bool any = false;
        for (const auto& a : automorphisms(g))
            if (automorphism_sign(g, a) < 0) any = true;
        CHECK(any == has_orientation_reversing_automorphism(g));
    }
}

TEST_CASE("trivalent generation matches the dart-pairing oracle") {
    auto two_conn = generate_trivalent(2, true, false);
    REQUIRE(two_conn.size() == 1);
    CHECK(two_conn[0].serialize() == "V=2;E=0-1,0-1,0-1");

    auto two_tad = generate_trivalent(2, true, true);
    CHECK(two_tad.size() == 2); // theta and the dumbbell

    auto four_conn = generate_trivalent(4, true, false);
    CHECK(four_conn.size() == 2); // K4 and the doubled square
    std::set<std::string> four_set;
    for (const auto& g : four_conn) four_set.insert(g.serialize());
    CHECK(four_set.count(canonical_form(k4_graph()).graph.serialize()) == 1);
    CHECK(four_set.count(canonical_form(doubled_square()).graph.serialize()) == 1);

    for (int vertices : {2, 4}) {
        for (bool connected : {true, false}) {
            for (bool tadpoles : {true, false}) {
                auto got = generate_trivalent(vertices, connected, tadpoles);
                std::set<std::string> got_set;
                for (const auto& g : got) got_set.insert(g.serialize());
                CHECK(got_set == pairing_oracle(vertices, connected, tadpoles));
            }
        }
    }

    CHECK_THROWS_AS(generate_trivalent(3, true, false), input_error);

    // frozen counts of connected tadpole-free classes
    CHECK(generate_trivalent(6, true, false).size() == 6);
    CHECK(generate_trivalent(8, true, false).size() == 20);

    // sorted and deterministic
    auto six = generate_trivalent(6, true, false);
    CHECK(std::is_sorted(six.begin(), six.end(), [](const Graph& a, const Graph& b) {
        return a.serialize() < b.serialize();
    }));
    for (const auto& g : six) {
        CHECK(g.is_trivalent());
        CHECK(g.is_connected());
        CHECK(!g.has_tadpole());
    }
}

TEST_CASE("orientation sign flips") {
    for (const auto& g : {theta_graph(), k4_graph()}) {
        std::vector<int> id_order(g.num_vertices);
        for (int i = 0; i < g.num_vertices; ++i) id_order[i] = i;
        std::vector<int> normal_tails(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) normal_tails[e] = 2 * e;

        Orientation base = orientation_from_data(g, id_order, normal_tails);
        CHECK(base.sign == 1);

        for (int i = 0; i + 1 < g.num_vertices; ++i) {
            auto order = id_order;
            std::swap(order[i], order[i + 1]);
            CHECK(orientation_from_data(g, order, normal_tails).sign == -1);
        }
        for (int e = 0; e < g.num_edges(); ++e) {
            auto tails = normal_tails;
            tails[e] = Graph::mate(tails[e]);
            CHECK(orientation_from_data(g, id_order, tails).sign == -1);
            // twice = back to normal
            tails[e] = Graph::mate(tails[e]);
            CHECK(orientation_from_data(g, id_order, tails).sign == 1);
        }
    }
}

TEST_CASE("cyclic order to orientation dictionary on theta") {
    Graph theta = theta_graph();
    // equal edge order at both vertices
    CyclicData equal;
    equal.orders = {{0, 2, 4}, {1, 3, 5}};
    // mirrored at vertex 1
    CyclicData mirror;
    mirror.orders = {{0, 2, 4}, {1, 5, 3}};

    int s_equal = orientation_from_cyclic(theta, equal).sign;
    int s_mirror = orientation_from_cyclic(theta, mirror).sign;
    CHECK(s_equal == -1);
    CHECK(s_mirror == 1);
    CHECK(s_equal == -s_mirror); // one vertex reversal flips the sign

    // rotation of a cyclic order changes nothing
    CyclicData rotated;
    rotated.orders = {{2, 4, 0}, {1, 3, 5}};
    CHECK(orientation_from_cyclic(theta, rotated).sign == s_equal);

    // K4 with neighbors-increasing orders: a definite, reproducible sign
    Graph k4 = k4_graph();
    CyclicData inc = default_cyclic(k4);
    int k4_sign = orientation_from_cyclic(k4, inc).sign;
    CHECK(orientation_from_cyclic(k4, inc).sign == k4_sign);

    CHECK_THROWS_AS(orientation_from_cyclic(make_graph(1, {{0, 0}}), default_cyclic(make_graph(1, {{0, 0}}))),
                    input_error);
}

TEST_CASE("reversing one cyclic order negates the orientation for all small trivalent graphs") {
    SplitMix64 rng(7);
    for (int vertices : {2, 4, 6}) {
        for (const auto& g : generate_trivalent(vertices, true, false)) {
            for (int trial = 0; trial < 50; ++trial) {
                CyclicData c = default_cyclic(g);
                for (auto& ord : c.orders) {
                    // random rotation/reflection-free shuffle of the 3 darts
                    for (int i = 2; i > 0; --i) {
                        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
                        std::swap(ord[i], ord[static_cast<size_t>(j)]);
                    }
                }
                int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.num_vertices)));
                CyclicData flipped = c;
                std::swap(flipped.orders[v][1], flipped.orders[v][2]);
                CHECK(orientation_from_cyclic(g, c).sign == -orientation_from_cyclic(g, flipped).sign);
            }
        }
    }
}

TEST_CASE("normalize merges, cancels, and kills zero classes") {
    Graph theta = theta_graph();
    GraphVector v;
    v.add_term(theta, Orientation{1}, Rat(1));
    v.add_term(theta, Orientation{-1}, Rat(1)); // AS pair
    CHECK(v.is_zero());

    // relabeled K4 terms merge with the transported sign
    Graph k4 = k4_graph();
    GraphVector w;
    w.add_term(k4, Orientation{1}, Rat(2));
    std::vector<int> perm = {2, 0, 3, 1};
    Relabeled r = relabel_graph(k4, perm);
    w.add_term(r.graph, Orientation{r.orientation_sign}, Rat(3));
    REQUIRE(w.size() == 1);
    CHECK(w.terms().begin()->second.coeff == Rat(5));

    // tadpole class is zero
    GraphVector t;
    t.add_term(make_graph(2, {{0, 0}, {0, 1}, {1, 1}}), Orientation{1}, Rat(7));
    CHECK(t.is_zero());

    // normalize is idempotent: re-adding canonical terms changes nothing
    GraphVector again;
    for (const auto& [key, term] : w.terms()) again.add_term(term.graph, Orientation{1}, term.coeff);
    CHECK(again == w);
}

TEST_CASE("AS relation: one edge reversal negates every small trivalent class") {
    for (int vertices : {2, 4, 6}) {
        for (const auto& g : generate_trivalent(vertices, true, false)) {
            GraphVector v;
            v.add_term(g, Orientation{1}, Rat(1));
            GraphVector w;
            w.add_term(g, Orientation{-1}, Rat(1));
            GraphVector sum = v;
            sum.add(w);
            CHECK(sum.is_zero());
            w.scale(Rat(-1));
            CHECK(v == w);
        }
    }
}

TEST_CASE("orientation transport is compatible with composition of relabelings") {
    SplitMix64 rng(99);
    for (const auto& g : {theta_graph(), k4_graph(), doubled_square()}) {
        for (int trial = 0; trial < 100; ++trial) {
            auto p1 = random_permutation(g.num_vertices, rng);
            Relabeled r1 = relabel_graph(g, p1);
            auto p2 = random_permutation(g.num_vertices, rng);
            Relabeled r2 = relabel_graph(r1.graph, p2);
            std::vector<int> comp(g.num_vertices);
            for (int v = 0; v < g.num_vertices; ++v) comp[v] = p2[p1[v]];
            Relabeled rc = relabel_graph(g, comp);
            CHECK(rc.graph.serialize() == r2.graph.serialize());
            CHECK(rc.orientation_sign == r1.orientation_sign * r2.orientation_sign);
        }
    }
}
