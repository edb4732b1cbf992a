#include "oracles.hpp"

#include <chordext/constructions.hpp>
#include <chordext/cycle.hpp>
#include <chordext/extendability.hpp>
#include <chordext/graph6.hpp>
#include <chordext/hamiltonian.hpp>
#include <chordext/random.hpp>
#include <chordext/triangles.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace chordext;

TEST_CASE("cycle validation", "[cycle]")
{
    CHECK_THROWS_AS(Cycle({0, 1}), InputError);
    CHECK_THROWS_AS(Cycle({0, 1, 0}), InputError);
    Graph c5 = make::cycle(5);
    Cycle c({0, 1, 2, 3, 4});
    CHECK(c.is_hamiltonian_in(c5));
    CHECK(c.contains_edge(Edge(4, 0)));
    CHECK_FALSE(c.contains_edge(Edge(0, 2)));
    CHECK_FALSE(Cycle({0, 2, 1, 3, 4}).is_cycle_of(c5));
    CHECK_THROWS_AS(Cycle({0, 2, 4}).check(c5), InputError);
    CHECK_THROWS_AS(Cycle({0, 1, 9}).check(c5), InputError);
    CHECK(c.to_string(c5) == "0,1,2,3,4");
    CHECK(format_set(c5, VertexSet{1, 3}) == "{1,3}");
}

TEST_CASE("Hamiltonicity agrees with permutation search", "[hamiltonian][property]")
{
    Rng rng(21);
    for (int i = 0; i < 1500; ++i) {
        const int n = 3 + static_cast<int>(rng.uniform_below(7));
        Graph g = oracle::gnp(rng, n, 0.3 + 0.5 * rng.unit());
        auto c = is_hamiltonian(g);
        INFO(encode_graph6(g));
        REQUIRE(c.has_value() == oracle::is_hamiltonian(g));
        if (c) REQUIRE(c->is_hamiltonian_in(g));
    }
}

TEST_CASE("Hamiltonian search options and domains", "[hamiltonian]")
{
    Graph k5 = make::complete(5);
    HamiltonOptions every_level{1};
    HamiltonOptions never{0};
    CHECK(is_hamiltonian(k5, every_level));
    CHECK(is_hamiltonian(k5, never));
    CHECK_FALSE(is_hamiltonian(make::path(5)));
    CHECK_FALSE(is_hamiltonian(make::complete(2)));

    auto c = hamiltonian_cycle_in(k5, VertexSet{1, 2, 4});
    REQUIRE(c);
    CHECK(c->vertex_set() == VertexSet{1, 2, 4});

    std::vector<Edge> required{{0, 2}, {1, 3}};
    auto r = hamiltonian_cycle_in(k5, k5.vertices(), required);
    REQUIRE(r);
    CHECK(r->contains_edge(Edge(0, 2)));
    CHECK(r->contains_edge(Edge(1, 3)));

    std::vector<Edge> star_edges{{0, 1}, {0, 2}, {0, 3}};
    CHECK_FALSE(hamiltonian_cycle_in(k5, k5.vertices(), star_edges));
    std::vector<Edge> missing{{0, 1}};
    CHECK_THROWS_AS(hamiltonian_cycle_in(make::cycle(5), VertexSet{0, 1, 2, 3, 4}, std::vector<Edge>{{0, 2}}), InputError);
    CHECK(hamiltonian_cycle_in(make::cycle(5), make::cycle(5).vertices(), missing));
}

TEST_CASE("required-edge search agrees with filtering all Hamiltonian cycles", "[hamiltonian][property]")
{
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + static_cast<int>(rng.uniform_below(4));
        Graph g = oracle::gnp(rng, n, 0.6);
        auto edges = g.edges();
        if (edges.empty()) continue;
        std::vector<Edge> req{edges[rng.uniform_below(edges.size())]};
        // Oracle: g has a Hamiltonian cycle through e iff g - e + subdivision of e is Hamiltonian.
        std::vector<Edge> sub_edges;
        for (const Edge& e : edges) {
            if (e != req[0]) sub_edges.push_back(e);
        }
        sub_edges.emplace_back(req[0].u, n);
        sub_edges.emplace_back(req[0].v, n);
        const bool expected = oracle::is_hamiltonian(Graph(n + 1, sub_edges));
        auto found = hamiltonian_cycle_in(g, g.vertices(), req);
        REQUIRE(found.has_value() == expected);
        if (found) REQUIRE(found->contains_edge(req[0]));
    }
}

TEST_CASE("triangle membership", "[cycle]")
{
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(triangle_membership(g) == VertexSet{0, 1, 2});
}

TEST_CASE("cyclable sets match direct search", "[extendability][property]")
{
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const int n = 3 + static_cast<int>(rng.uniform_below(6));
        Graph g = oracle::gnp(rng, n, 0.3 + 0.6 * rng.unit());
        auto ours = cyclable_sets(g, n);
        auto expected = oracle::cyclable_sets(g);
        std::sort(ours.begin(), ours.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
        REQUIRE(ours == expected);
    }
}

TEST_CASE("full extendability audit agrees with the definition", "[extendability][property]")
{
    Rng rng(24);
    int failing = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 3 + static_cast<int>(rng.uniform_below(6));
        Graph g = (i % 2 == 0) ? oracle::gnp(rng, n, 0.4 + 0.5 * rng.unit())
                               : ChordalStream(GenSpec{n, 0, {}, rng.next()}).next();
        auto rep = is_fully_cycle_extendable(g);
        INFO(encode_graph6(g));
        REQUIRE((rep.status == AuditStatus::pass) == oracle::is_fully_cycle_extendable(g));
        if (rep.status == AuditStatus::fail) {
            ++failing;
            if (rep.witness_set) {
                REQUIRE(rep.witness_cycle->vertex_set() == *rep.witness_set);
                REQUIRE(rep.witness_cycle->is_cycle_of(g));
                for (Vertex v : g.vertices() - *rep.witness_set) REQUIRE_FALSE(oracle::has_spanning_cycle(g, rep.witness_set->with(v)));
            } else {
                REQUIRE_FALSE(rep.outside_triangles.empty());
            }
        }
    }
    CHECK(failing > 20);
}

TEST_CASE("audit budget yields an inconclusive verdict", "[extendability]")
{
    AuditOptions tiny;
    tiny.set_budget = 3;
    auto rep = is_fully_cycle_extendable(make::complete(7), tiny);
    CHECK(rep.status == AuditStatus::inconclusive);
    CHECK(std::string(to_string(rep.status)) == "inconclusive");
    CHECK_FALSE(rep.witness_set);

    // Stopping before the single spanning set still leaves every size up to 14
    // complete, so the size-13 witness of H* is still established.
    Graph hs = build_H_star();
    AuditOptions almost;
    almost.set_budget = is_fully_cycle_extendable(hs).cyclable_set_count - 1;
    auto partial = is_fully_cycle_extendable(hs, almost);
    CHECK(partial.status == AuditStatus::fail);
    REQUIRE(partial.witness_set);
    CHECK(partial.witness_set->size() == 13);
}

TEST_CASE("cycle extension in H", "[extendability]")
{
    BaseGraphH h = build_H();
    const Graph& g = h.graph;
    auto verdict = is_cycle_extendable(g, h.cycle_c);
    REQUIRE(verdict.extendable);
    CHECK(g.label(*verdict.vertex) == "z1");
    CHECK(verdict.extension->vertex_set() == h.cycle_c.vertex_set().with(g["z1"]));
    CHECK(verdict.extension->is_cycle_of(g));

    // z2 also extends C: a,b,c,d,e,f,g,h,z2 in some order.
    auto via_z2 = hamiltonian_cycle_in(g, h.cycle_c.vertex_set().with(g["z2"]));
    REQUIRE(via_z2);
    CHECK(via_z2->length() == 9);

    CHECK_FALSE(extension_with_required_edges(g, h.cycle_c, h.heavy));
    CHECK_THROWS_AS(is_cycle_extendable(g, h.cycle_cstar), PreconditionError);
}

TEST_CASE("extension candidates prefer vertices with more cycle neighbours", "[extendability]")
{
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}});
    CHECK(extension_candidates(g, VertexSet{0, 1, 2}) == std::vector<Vertex>{4, 5, 3});
}

TEST_CASE("pancyclicity", "[extendability]")
{
    CHECK(is_pancyclic(make::complete(5)));
    CHECK_FALSE(is_pancyclic(make::cycle(5)));
    CHECK(is_pancyclic(build_H().graph));
    CHECK_FALSE(is_pancyclic(make::complete(2)));
}

TEST_CASE("simplicial reduction", "[extendability]")
{
    BaseGraphH h = build_H();
    for (Vertex v : simplicial_vertices(h.graph)) {
        auto c = reduce_by_simplicial(h.graph, v, h.cycle_cstar);
        REQUIRE(c);
        CHECK(c->is_hamiltonian_in(delete_vertices(h.graph, VertexSet::single(v)).graph));
    }
    CHECK_FALSE(reduce_by_simplicial(make::complete(3), 0));
    CHECK_THROWS_AS(reduce_by_simplicial(h.graph, h.graph["a"]), PreconditionError);
    CHECK_THROWS_AS(reduce_by_simplicial(make::path(3), 0), PreconditionError);
}

TEST_CASE("common neighbour on a cycle", "[extendability]")
{
    BaseGraphH h = build_H();
    for (const Edge& e : h.cycle_c.edges()) {
        Vertex w = common_cycle_neighbour(h.graph, h.cycle_c, e);
        CHECK(h.cycle_c.vertex_set().contains(w));
        CHECK(h.graph.adjacent(w, e.u));
        CHECK(h.graph.adjacent(w, e.v));
    }
    Graph c4 = make::cycle(4);
    CHECK_THROWS_AS(common_cycle_neighbour(c4, Cycle({0, 1, 2, 3}), Edge(0, 1)), ContractViolation);
}

TEST_CASE("extension verdict depends only on the vertex set", "[extendability][property]")
{
    Rng rng(25);
    int compared = 0;
    for (int i = 0; i < 150; ++i) {
        const int n = 5 + static_cast<int>(rng.uniform_below(3));
        Graph g = ChordalStream(GenSpec{n, 0, 0.4 + 0.5 * rng.unit(), rng.next()}).next();
        for (VertexSet s : oracle::cyclable_sets(g)) {
            if (s.size() == n || s.size() > 5) continue;
            // Every cyclic arrangement of s that is a cycle of g.
            std::vector<Vertex> p = s.to_vector();
            std::optional<bool> first;
            do {
                Cycle c(p);
                if (!c.is_cycle_of(g)) continue;
                auto verdict = is_cycle_extendable(g, c);
                if (verdict.extendable) {
                    REQUIRE(verdict.extension->length() == c.length() + 1);
                    REQUIRE(verdict.extension->vertex_set() == s.with(*verdict.vertex));
                }
                if (first) {
                    REQUIRE(verdict.extendable == *first);
                    ++compared;
                }
                first = verdict.extendable;
            } while (std::next_permutation(p.begin() + 1, p.end()));
        }
    }
    CHECK(compared > 100);
}
