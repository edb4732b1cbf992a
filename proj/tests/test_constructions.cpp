#include "oracles.hpp"

#include <chordext/constructions.hpp>
#include <chordext/forbidden.hpp>
#include <chordext/graph6.hpp>
#include <chordext/strongly_chordal.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace chordext;

TEST_CASE("H has the documented structure", "[constructions]")
{
    BaseGraphH h = build_H();
    const Graph& g = h.graph;
    CHECK(g.order() == 10);
    CHECK(g.size() == 29);
    CHECK(g.degree(g["a"]) == 9);
    CHECK(g.degree(g["e"]) == 9);
    CHECK(base_invariant_violations(h).empty());
    CHECK(oracle::is_chordal(g));
    CHECK(h.cycle_c.to_string(g) == "a,b,c,h,g,f,e,d");
    CHECK(h.cycle_cstar.to_string(g) == "a,b,z1,z2,g,h,c,d,e,f");
    std::vector<std::string> heavy;
    for (const Edge& e : h.heavy) heavy.push_back(edge_name(g, e));
    CHECK(heavy == std::vector<std::string>{"ab", "de", "ef", "ch", "gh"});
    std::vector<std::string> peo;
    for (Vertex v : h.peo) peo.push_back(g.label(v));
    CHECK(peo == std::vector<std::string>{"f", "g", "z2", "z1", "b", "a", "c", "d", "e", "h"});
}

TEST_CASE("mutated bases report their broken invariants", "[constructions]")
{
    BaseGraphH h = build_H();
    auto no_gh = with_edge_removed(h, Edge(h.graph["g"], h.graph["h"]));
    auto bad = base_invariant_violations(no_gh);
    CHECK(std::find(bad.begin(), bad.end(), "size 28 != 29") != bad.end());
    CHECK(std::find(bad.begin(), bad.end(), "heavy pair gh is not an edge") != bad.end());
    auto four = with_heavy_dropped(h, Edge(h.graph["g"], h.graph["h"]));
    CHECK(four.heavy.size() == 4);
    CHECK(base_invariant_violations(four) == std::vector<std::string>{"4 heavy edges instead of 5"});
}

TEST_CASE("without gh as a required edge C extends keeping the other four", "[constructions]")
{
    BaseGraphH h = build_H();
    auto four = with_heavy_dropped(h, Edge(h.graph["g"], h.graph["h"]));
    auto ext = extension_with_required_edges(h.graph, h.cycle_c, four.heavy);
    REQUIRE(ext);
    CHECK(ext->length() == 9);
    CHECK(ext->is_cycle_of(h.graph));
    for (const Edge& k : four.heavy) CHECK(ext->contains_edge(k));
}

TEST_CASE("clique sizes spread the surplus evenly", "[constructions]")
{
    CHECK(clique_sizes_for(15) == std::array<int, 5>{3, 3, 3, 3, 3});
    CHECK(clique_sizes_for(16) == std::array<int, 5>{4, 3, 3, 3, 3});
    CHECK(clique_sizes_for(18) == std::array<int, 5>{4, 4, 4, 3, 3});
    CHECK(clique_sizes_for(21) == std::array<int, 5>{5, 4, 4, 4, 4});
    CHECK_THROWS_AS(clique_sizes_for(14), InputError);
}

TEST_CASE("counterexamples for n = 15..22", "[constructions]")
{
    for (int n = 15; n <= 22; ++n) {
        Counterexample ce = build_counterexample(n);
        Certification c = certify(ce);
        INFO(n << ": " << c.summary(ce.graph));
        REQUIRE(c.ok());
        CHECK(ce.graph.order() == n);
        CHECK(ce.d_cycle.length() == n - 2);
        CHECK(ce.off_d == ce.graph.set_of({"z1", "z2"}));
        REQUIRE(c.verdict);
        CHECK(c.verdict->exhausted_candidates.size() == 2);
    }
    CHECK(build_counterexample(15).graph.size() == 39);
    CHECK(encode_graph6(build_counterexample(15).graph) == "N|}K^vHa}?B?B?GO?W?");
}

TEST_CASE("D of the 15-vertex counterexample is non-extendable by brute force", "[constructions]")
{
    Counterexample ce = build_counterexample(15);
    const VertexSet d = ce.d_cycle.vertex_set();
    for (Vertex v : ce.graph.vertices() - d) CHECK_FALSE(oracle::has_spanning_cycle(ce.graph, d.with(v)));
    CHECK(oracle::is_hamiltonian(ce.graph));
}

TEST_CASE("ratio construction", "[constructions]")
{
    double previous = 1.0;
    for (int k : {3, 10, 25}) {
        Counterexample ce = build_ratio_counterexample(15, k);
        REQUIRE(certify(ce).ok());
        CHECK(ce.graph.order() == 13 + k);
        CHECK(ce.d_cycle.length() == 13);
        CHECK(ce.off_d.size() == k);
        const double ratio = 13.0 / (13 + k);
        CHECK(ratio < previous);
        previous = ratio;
    }
    CHECK(previous < 0.35);
    CHECK_THROWS_AS(build_ratio_counterexample(15, 2), InputError);
}

TEST_CASE("generalized pasting", "[constructions]")
{
    ConstructionSpec k3;
    CHECK(build_generalized(k3).graph.same_adjacency(build_counterexample(15).graph));

    ConstructionSpec k4;
    k4.heavy_pastes.fill(CliquePaste{4});
    Counterexample a = build_generalized(k4);
    CHECK(a.graph.order() == 20);
    CHECK(a.d_cycle.length() == 18);

    ConstructionSpec diamond;
    diamond.heavy_pastes.fill(GraphPaste{pattern("diamond").graph, 0, 1, Cycle({0, 1, 3, 2})});
    Counterexample b = build_generalized(diamond);
    CHECK(b.graph.order() == 20);
    CHECK(b.graph.size() == 29 + 5 * 4);

    ConstructionSpec mixed;
    mixed.heavy_pastes[2] = GraphPaste{join(make::complete(1), make::path(4)), 0, 1, Cycle({0, 1, 2, 3, 4})};
    mixed.z12_paste = CliquePaste{5};
    CHECK_NOTHROW(build_generalized(mixed));

    ConstructionSpec bad_witness;
    bad_witness.heavy_pastes[0] = GraphPaste{make::complete(4), 0, 2, Cycle({0, 1, 2, 3})};
    CHECK_THROWS_AS(build_generalized(bad_witness), PreconditionError);

    ConstructionSpec not_chordal;
    not_chordal.heavy_pastes[0] = GraphPaste{make::cycle(4), 0, 1, Cycle({0, 1, 2, 3})};
    CHECK_THROWS_AS(build_generalized(not_chordal), PreconditionError);
}

TEST_CASE("H+ and H*", "[constructions]")
{
    Graph hp = build_H_plus();
    CHECK(hp.order() == 11);
    CHECK(hp.neighbours(hp["x"]) == hp.set_of({"g", "h"}));
    CHECK(is_chordal(hp));
    CHECK_FALSE(is_strongly_chordal(hp));
    for (int n : {15, 16}) CHECK(contains_induced(hp, build_counterexample(n).graph));

    Graph hs = build_H_star();
    CHECK(hs.order() == 15);
    CHECK(longest_induced_path(build_H().graph).length == 7);
    CHECK(longest_induced_path(hs).length == 9);
    std::vector<NamedPattern> p10{pattern("P10")};
    CHECK(is_free(hs, p10));
    auto rep = is_fully_cycle_extendable(hs);
    CHECK(rep.status == AuditStatus::fail);
    CHECK(rep.non_extendable_count == 1);
    REQUIRE(rep.witness_set);
    CHECK(*rep.witness_set == hs.vertices() - hs.set_of({"z1", "z2"}));
}
