#pragma once

// Claim registry and report. Each claim is an independent check of one
// statement about H, the constructions built from it, or a randomized
// property of Hamiltonian chordal graphs; verify_all runs them in registry
// order and records pass / fail / inconclusive with a witness.

#include "chordal.hpp"
#include "constructions.hpp"
#include "extendability.hpp"
#include "forbidden.hpp"
#include "graph6.hpp"
#include "metrics.hpp"
#include "random.hpp"
#include "strongly_chordal.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace chordext {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2015c4a1d0ULL;
/// Environment variable that overrides kDefaultSeed.
inline constexpr const char* kSeedEnvVar = "CHORDEXT_SEED";

/// kDefaultSeed, or the value of $CHORDEXT_SEED when it parses as an unsigned integer.
inline std::uint64_t default_seed()
{
    if (const char* env = std::getenv(kSeedEnvVar)) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 0);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultSeed;
}

enum class ClaimStatus { pass, fail, inconclusive };

inline const char* to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::inconclusive;
    std::string witness;
    std::string detail;
    double wall_time_ms = 0.0;
};

struct VerifyOptions {
    int max_n = 18;
    /// Samples per randomized claim; 0 leaves those claims inconclusive.
    std::size_t samples = 500;
    std::uint64_t seed = default_seed();
    int min_sample_order = 6;
    int max_sample_order = 12;
    /// Replacement for H, for negative controls.
    std::optional<BaseGraphH> base;
};

struct VerificationReport {
    VerifyOptions options;
    std::vector<ClaimResult> claims;

    std::size_t count(ClaimStatus s) const
    {
        std::size_t c = 0;
        for (const auto& r : claims) c += r.status == s ? 1 : 0;
        return c;
    }

    const ClaimResult* find(std::string_view id) const
    {
        for (const auto& r : claims) {
            if (r.id == id) return &r;
        }
        return nullptr;
    }

    /// 0 all pass, 1 any failure, 2 inconclusive claims but no failure.
    int exit_code() const
    {
        if (count(ClaimStatus::fail) > 0) return 1;
        if (count(ClaimStatus::inconclusive) > 0) return 2;
        return 0;
    }

    /// Report document. Field names: schema, options{max_n, samples, seed,
    /// sample_orders, base}, claims[{id, anchor, status, witness, detail,
    /// wall_time_ms}], summary{pass, fail, inconclusive}.
    nlohmann::json to_json() const
    {
        nlohmann::json claims_json = nlohmann::json::array();
        for (const auto& r : claims) {
            claims_json.push_back({{"id", r.id},
                                   {"anchor", r.anchor},
                                   {"status", to_string(r.status)},
                                   {"witness", r.witness},
                                   {"detail", r.detail},
                                   {"wall_time_ms", r.wall_time_ms}});
        }
        return {{"schema", "chordext-verification/1"},
                {"options",
                 {{"max_n", options.max_n},
                  {"samples", options.samples},
                  {"seed", options.seed},
                  {"sample_orders", {options.min_sample_order, options.max_sample_order}},
                  {"base", options.base ? "custom" : "standard"}}},
                {"claims", std::move(claims_json)},
                {"summary",
                 {{"pass", count(ClaimStatus::pass)},
                  {"fail", count(ClaimStatus::fail)},
                  {"inconclusive", count(ClaimStatus::inconclusive)}}}};
    }

    std::string to_text() const
    {
        std::ostringstream out;
        for (const auto& r : claims) {
            std::string tag = r.status == ClaimStatus::pass ? "PASS" : r.status == ClaimStatus::fail ? "FAIL" : "INCONCLUSIVE";
            out << tag << "  " << r.id << "  (" << static_cast<long long>(r.wall_time_ms + 0.5) << " ms)\n";
            out << "      " << r.anchor << "\n";
            if (!r.detail.empty()) out << "      " << r.detail << "\n";
            if (!r.witness.empty() && r.status != ClaimStatus::pass) out << "      witness: " << r.witness << "\n";
        }
        out << count(ClaimStatus::pass) << " pass, " << count(ClaimStatus::fail) << " fail, "
            << count(ClaimStatus::inconclusive) << " inconclusive\n";
        return out.str();
    }
};

struct ClaimOutcome {
    ClaimStatus status = ClaimStatus::pass;
    std::string witness;
    std::string detail;

    static ClaimOutcome pass(std::string detail = {}) { return {ClaimStatus::pass, {}, std::move(detail)}; }
    static ClaimOutcome fail(std::string witness, std::string detail = {})
    {
        return {ClaimStatus::fail, std::move(witness), std::move(detail)};
    }
    static ClaimOutcome inconclusive(std::string detail) { return {ClaimStatus::inconclusive, {}, std::move(detail)}; }
};

struct Claim {
    std::string id;
    std::string anchor;
    std::function<ClaimOutcome()> check;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Draws `samples` graphs from the filtered class and applies check, which
/// returns a failure description or nothing.
template <class Check>
ClaimOutcome run_suite(const VerifyOptions& o, std::string_view id, ClassFilter filter, Check&& check)
{
    if (o.samples == 0) return ClaimOutcome::inconclusive("no samples requested");
    GenSpec spec;
    spec.order = o.min_sample_order;
    spec.max_order = o.max_sample_order;
    spec.seed = o.seed ^ fnv1a(id);
    spec.filter = std::move(filter);
    FilteredStream stream(spec);
    Rng rng(spec.seed + 1);
    std::size_t tested = 0;
    while (tested < o.samples) {
        auto g = stream.next();
        if (!g) break;
        ++tested;
        if (auto problem = check(*g, rng)) {
            return ClaimOutcome::fail(encode_graph6(*g), "sample " + std::to_string(tested) + ": " + *problem);
        }
    }
    std::ostringstream detail;
    detail << tested << " samples at orders " << o.min_sample_order << "-" << o.max_sample_order << ", "
           << stream.attempts() << " draws";
    if (tested < o.samples) return ClaimOutcome::inconclusive("generator exhausted after " + detail.str());
    return ClaimOutcome::pass(detail.str());
}

inline std::string describe(const Graph& g, const Cycle& c) { return c.to_string(g); }

} // namespace detail

/// The claims verify_all runs, in report order.
inline std::vector<Claim> claim_registry(const VerifyOptions& o)
{
    const BaseGraphH base = o.base ? *o.base : build_H();
    std::vector<Claim> reg;

    reg.push_back({"H.structure", "H has 10 vertices and 29 edges, a and e are universal, the 5 heavy edges are edges",
                   [base] {
                       auto bad = base_invariant_violations(base);
                       if (!bad.empty()) {
                           std::string all;
                           for (const auto& b : bad) all += (all.empty() ? "" : "; ") + b;
                           return ClaimOutcome::fail(all);
                       }
                       return ClaimOutcome::pass("10 vertices, 29 edges, heavy = ab,de,ef,ch,gh");
                   }});

    reg.push_back({"H.peo", "f,g,z2,z1,b,a,c,d,e,h is a perfect elimination ordering of H, so H is chordal", [base] {
                       const Graph& g = base.graph;
                       if (!is_perfect_elimination(g, base.peo)) return ClaimOutcome::fail("ordering is not perfect");
                       if (!is_chordal(g)) return ClaimOutcome::fail("lex-BFS ordering is not perfect");
                       return ClaimOutcome::pass("stored ordering and lex-BFS ordering both perfect");
                   }});

    reg.push_back({"H.cycles", "C* is a Hamiltonian cycle of H, C spans V(H) minus z1,z2, both use every heavy edge",
                   [base] {
                       const Graph& g = base.graph;
                       try {
                           base.cycle_cstar.check(g);
                           base.cycle_c.check(g);
                       } catch (const InputError& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                       if (!base.cycle_cstar.is_hamiltonian_in(g)) return ClaimOutcome::fail(base.cycle_cstar.to_string(g));
                       if (base.cycle_c.vertex_set() != g.vertices() - g.set_of({"z1", "z2"})) {
                           return ClaimOutcome::fail(base.cycle_c.to_string(g), "C does not span V - {z1,z2}");
                       }
                       for (const Edge& e : base.heavy) {
                           if (!base.cycle_c.contains_edge(e) || !base.cycle_cstar.contains_edge(e)) {
                               return ClaimOutcome::fail(edge_name(g, e), "heavy edge missing from a cycle");
                           }
                       }
                       return ClaimOutcome::pass("C* = " + base.cycle_cstar.to_string(g) + "; C = " + base.cycle_c.to_string(g));
                   }});

    reg.push_back({"H.heavy_lemma", "no extension of C in H contains every heavy edge (exhaustive over z1, z2)", [base] {
                       const Graph& g = base.graph;
                       try {
                           if (auto ext = extension_with_required_edges(g, base.cycle_c, base.heavy)) {
                               return ClaimOutcome::fail(ext->to_string(g), "extension using every heavy edge exists");
                           }
                           auto free = is_cycle_extendable(g, base.cycle_c);
                           if (!free.extendable) return ClaimOutcome::fail(base.cycle_c.to_string(g), "C does not extend at all");
                           return ClaimOutcome::pass("no heavy-preserving extension; unconstrained extension through " +
                                                     g.label(*free.vertex) + ": " + free.extension->to_string(g));
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what(), "check could not run");
                       }
                   }});

    for (int n = 15; n <= o.max_n; ++n) {
        reg.push_back({"counterexample.n" + std::to_string(n),
                       "pasting cliques on the heavy edges gives a chordal Hamiltonian graph on " + std::to_string(n) +
                           " vertices whose cycle D of length " + std::to_string(n - 2) + " does not extend",
                       [base, n] {
                           try {
                               Counterexample ce = build_counterexample(n, base);
                               Certification c = certify(ce);
                               if (!c.ok()) return ClaimOutcome::fail(encode_graph6(ce.graph), c.summary(ce.graph));
                               if (ce.graph.order() != n || ce.d_cycle.length() != n - 2) {
                                   return ClaimOutcome::fail(encode_graph6(ce.graph), "unexpected order or |D|");
                               }
                               return ClaimOutcome::pass(encode_graph6(ce.graph) + "; D = " + ce.d_cycle.to_string(ce.graph));
                           } catch (const std::exception& e) {
                               return ClaimOutcome::fail(e.what(), "construction failed");
                           }
                       }});
    }

    reg.push_back({"counterexample.ratio",
                   "a clique K_k on z1z2 keeps D (length 13) non-extendable in a Hamiltonian graph on 13+k vertices",
                   [base] {
                       std::string detail;
                       for (auto [n, k] : {std::pair{15, 3}, {15, 10}, {15, 25}, {16, 5}}) {
                           try {
                               Counterexample ce = build_ratio_counterexample(n, k, base);
                               Certification c = certify(ce);
                               if (!c.ok() || ce.graph.order() != n + k - 2 || ce.d_cycle.length() != n - 2) {
                                   return ClaimOutcome::fail(encode_graph6(ce.graph),
                                                             "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                                                                 "): " + c.summary(ce.graph));
                               }
                               detail += "(" + std::to_string(n) + "," + std::to_string(k) + ") ratio " +
                                         std::to_string(n - 2) + "/" + std::to_string(n + k - 2) + "; ";
                           } catch (const std::exception& e) {
                               return ClaimOutcome::fail(e.what(), "construction failed");
                           }
                       }
                       return ClaimOutcome::pass(detail);
                   }});

    reg.push_back({"counterexample.generalized",
                   "pasting any five Hamiltonian chordal graphs (K3, K4, diamond) along Hamiltonian-cycle edges works",
                   [base] {
                       try {
                           ConstructionSpec k3;
                           Counterexample a = build_generalized(k3, base);
                           if (!a.graph.same_adjacency(build_counterexample(15, base).graph)) {
                               return ClaimOutcome::fail(encode_graph6(a.graph), "K3 pastes differ from n = 15");
                           }
                           ConstructionSpec k4;
                           k4.heavy_pastes.fill(CliquePaste{4});
                           Counterexample b = build_generalized(k4, base);
                           ConstructionSpec diamond;
                           Graph dg = pattern("diamond").graph; // K4 minus 0-3; Hamiltonian cycle 0,1,3,2
                           diamond.heavy_pastes.fill(GraphPaste{dg, 0, 1, Cycle({0, 1, 3, 2})});
                           Counterexample c = build_generalized(diamond, base);
                           return ClaimOutcome::pass("K4: order " + std::to_string(b.graph.order()) + ", diamond: order " +
                                                     std::to_string(c.graph.order()));
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                   }});

    reg.push_back({"Hplus.sun", "{a,b,f,g,h,x} induces a 3-sun in H+ (H plus x adjacent to g and h)", [base] {
                       Graph hp = build_H_plus(base);
                       auto sun = find_sun(hp);
                       const VertexSet expected = hp.set_of({"a", "b", "f", "g", "h", "x"});
                       if (!sun) return ClaimOutcome::fail(encode_graph6(hp), "no sun found");
                       if (sun->k != 3 || sun->vertices != expected) {
                           return ClaimOutcome::fail(format_set(hp, sun->vertices), "unexpected sun");
                       }
                       if (is_strongly_chordal(hp)) return ClaimOutcome::fail(encode_graph6(hp), "H+ strongly chordal");
                       return ClaimOutcome::pass("3-sun " + format_set(hp, sun->vertices));
                   }});

    reg.push_back({"counterexample.not_strongly_chordal",
                   "H+ is an induced subgraph of every counterexample, which therefore contains a sun",
                   [base, max_n = o.max_n] {
                       try {
                           Graph hp = build_H_plus(base);
                           for (int n = 15; n <= max_n; ++n) {
                               Counterexample ce = build_counterexample(n, base);
                               if (!contains_induced(hp, ce.graph)) return ClaimOutcome::fail(encode_graph6(ce.graph), "no induced H+");
                               if (is_strongly_chordal(ce.graph)) return ClaimOutcome::fail(encode_graph6(ce.graph), "strongly chordal");
                           }
                           auto r = build_ratio_counterexample(15, 10, base);
                           if (!contains_induced(hp, r.graph) || is_strongly_chordal(r.graph)) {
                               return ClaimOutcome::fail(encode_graph6(r.graph), "ratio construction");
                           }
                           return ClaimOutcome::pass("n = 15.." + std::to_string(max_n) + " and ratio (15,10)");
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                   }});

    reg.push_back({"Hstar.induced_paths",
                   "H has a longest induced path on 7 vertices; H* on 9, so H* is P10-free but not P9-free", [base] {
                       try {
                           Graph hs = build_H_star(base);
                           auto ph = longest_induced_path(base.graph);
                           auto ps = longest_induced_path(hs);
                           if (ph.length != 7) return ClaimOutcome::fail(std::to_string(ph.length), "longest induced path of H");
                           if (ps.length != 9) return ClaimOutcome::fail(std::to_string(ps.length), "longest induced path of H*");
                           std::vector<NamedPattern> p10{pattern("P10")};
                           std::vector<NamedPattern> p9{pattern("P9")};
                           if (!is_free(hs, p10) || is_free(hs, p9)) return ClaimOutcome::fail(encode_graph6(hs), "P9/P10 matcher");
                           std::string path;
                           for (Vertex v : ps.vertices) path += (path.empty() ? "" : "-") + hs.label(v);
                           return ClaimOutcome::pass("H*: " + path);
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                   }});

    reg.push_back({"Hstar.not_fully_extendable",
                   "H* is a P10-free Hamiltonian chordal graph that is not fully cycle extendable", [base] {
                       try {
                           Graph hs = build_H_star(base);
                           auto rep = is_fully_cycle_extendable(hs);
                           if (rep.status != AuditStatus::fail || !rep.witness_set) {
                               return ClaimOutcome::fail(encode_graph6(hs), "audit did not fail");
                           }
                           if (*rep.witness_set != hs.vertices() - hs.set_of({"z1", "z2"})) {
                               return ClaimOutcome::fail(format_set(hs, *rep.witness_set), "unexpected witness set");
                           }
                           return ClaimOutcome::pass("only non-extendable cyclable set: V - {z1,z2} (" +
                                                     std::to_string(rep.non_extendable_count) + " of " +
                                                     std::to_string(rep.cyclable_set_count) + ")");
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                   }});

    reg.push_back({"counterexample.connectivity_toughness",
                   "every counterexample has a 2-vertex cut and toughness exactly 1", [base, max_n = o.max_n] {
                       try {
                           std::string detail;
                           for (int n = 15; n <= max_n; ++n) {
                               Counterexample ce = build_counterexample(n, base);
                               auto k = vertex_connectivity(ce.graph);
                               auto t = toughness(ce.graph);
                               if (k.value != 2) return ClaimOutcome::fail(format_set(ce.graph, k.cut), "n=" + std::to_string(n) + " connectivity " + std::to_string(k.value));
                               if (!t || t->value != Rational(1)) {
                                   return ClaimOutcome::fail(t ? format_set(ce.graph, t->cut) : "complete",
                                                             "n=" + std::to_string(n) + " toughness " + (t ? t->value.to_string() : "inf"));
                               }
                               detail += "n=" + std::to_string(n) + ": cut " + format_set(ce.graph, k.cut) + ", tough cut " +
                                         format_set(ce.graph, t->cut) + "; ";
                           }
                           return ClaimOutcome::pass(detail);
                       } catch (const std::exception& e) {
                           return ClaimOutcome::fail(e.what());
                       }
                   }});

    ClassFilter hamiltonian;
    hamiltonian.hamiltonian = true;

    reg.push_back({"random.simplicial_reduction",
                   "deleting a simplicial vertex from a Hamiltonian chordal graph leaves it Hamiltonian",
                   [o, hamiltonian] {
                       return detail::run_suite(o, "random.simplicial_reduction", hamiltonian,
                                                [](const Graph& g, Rng&) -> std::optional<std::string> {
                                                    for (Vertex v : simplicial_vertices(g)) {
                                                        auto sub = delete_vertices(g, VertexSet::single(v));
                                                        auto c = reduce_by_simplicial(g, v);
                                                        if (!c || !c->is_hamiltonian_in(sub.graph) || !is_hamiltonian(sub.graph)) {
                                                            return "G - " + g.label(v) + " not Hamiltonian";
                                                        }
                                                    }
                                                    return std::nullopt;
                                                });
                   }});

    reg.push_back({"random.pancyclic", "Hamiltonian chordal graphs are pancyclic", [o, hamiltonian] {
                       return detail::run_suite(o, "random.pancyclic", hamiltonian,
                                                [](const Graph& g, Rng&) -> std::optional<std::string> {
                                                    if (!is_pancyclic(g)) return std::string("not pancyclic");
                                                    return std::nullopt;
                                                });
                   }});

    reg.push_back({"random.common_neighbour",
                   "the ends of an edge within a cycle of a chordal graph share a neighbour on the cycle",
                   [o, hamiltonian] {
                       return detail::run_suite(
                           o, "random.common_neighbour", hamiltonian, [](const Graph& g, Rng& rng) -> std::optional<std::string> {
                               std::optional<Cycle> c;
                               for (int attempt = 0; attempt < 20 && !c; ++attempt) {
                                   VertexSet s(rng.next() & g.vertices().bits());
                                   if (s.size() >= 3 && may_be_cyclable(g, s)) c = hamiltonian_cycle_in(g, s);
                               }
                               if (!c) c = is_hamiltonian(g);
                               const VertexSet on = c->vertex_set();
                               for (const Edge& e : g.edges()) {
                                   if (!on.contains(e.u) || !on.contains(e.v)) continue;
                                   try {
                                       Vertex w = common_cycle_neighbour(g, *c, e);
                                       if (!g.adjacent(w, e.u) || !g.adjacent(w, e.v) || !on.contains(w)) return std::string("bad neighbour");
                                   } catch (const ContractViolation&) {
                                       return "edge " + g.label(e.u) + g.label(e.v) + " on cycle " + c->to_string(g);
                                   }
                               }
                               return std::nullopt;
                           });
                   }});

    reg.push_back({"random.local_connectivity",
                   "a connected chordal graph is 2-connected exactly when it is locally connected", [o] {
                       return detail::run_suite(o, "random.local_connectivity", ClassFilter{},
                                                [](const Graph& g, Rng&) -> std::optional<std::string> {
                                                    const bool two_connected = vertex_connectivity(g).value >= 2;
                                                    if (two_connected != is_locally_connected(g)) {
                                                        return std::string(two_connected ? "2-connected but not locally connected"
                                                                                         : "locally connected but not 2-connected");
                                                    }
                                                    return std::nullopt;
                                                });
                   }});

    reg.push_back({"random.separators",
                   "minimal separators of chordal graphs are cliques and every side holds a simplicial vertex", [o] {
                       return detail::run_suite(
                           o, "random.separators", ClassFilter{}, [](const Graph& g, Rng&) -> std::optional<std::string> {
                               const VertexSet simplicial = simplicial_vertices(g);
                               if (!g.is_clique(g.vertices())) {
                                   bool pair = false;
                                   for (Vertex v : simplicial) pair = pair || (simplicial - g.neighbours(v)).without(v).size() > 0;
                                   if (!pair) return std::string("no two non-adjacent simplicial vertices");
                               }
                               for (const auto& sep : minimal_separators(g)) {
                                   if (!g.is_clique(sep.cut)) return "separator " + format_set(g, sep.cut) + " not a clique";
                                   for (VertexSet comp : sep.components) {
                                       if (!comp.intersects(simplicial)) return "component " + format_set(g, comp) + " lacks a simplicial vertex";
                                   }
                               }
                               return std::nullopt;
                           });
                   }});

    auto theorem_claim = [&](std::string id, std::string anchor, std::vector<std::string> forbidden) {
        ClassFilter f = hamiltonian;
        for (const auto& name : forbidden) f.forbidden.push_back(pattern(name));
        reg.push_back({id, std::move(anchor), [o, id, f] {
                           return detail::run_suite(o, id, f, [](const Graph& g, Rng&) -> std::optional<std::string> {
                               auto rep = is_fully_cycle_extendable(g);
                               if (rep.status == AuditStatus::pass) return std::nullopt;
                               if (rep.witness_set) return "non-extendable set " + format_set(g, *rep.witness_set);
                               if (!rep.outside_triangles.empty()) return "vertices on no triangle " + format_set(g, rep.outside_triangles);
                               return std::string("audit inconclusive");
                           });
                       }});
    };
    theorem_claim("random.p5_free", "P5-free Hamiltonian chordal graphs are fully cycle extendable", {"P5"});
    theorem_claim("random.bull_k15_free", "{bull, K1,5}-free Hamiltonian chordal graphs are fully cycle extendable",
                  {"bull", "K1,5"});
    theorem_claim("random.bull_k2p5_free", "{bull, K2 v P5}-free Hamiltonian chordal graphs are fully cycle extendable",
                  {"bull", "K2vP5"});

    return reg;
}

/// Runs every claim of the registry; failures are recorded, never thrown.
inline VerificationReport verify_all(const VerifyOptions& options = {})
{
    if (options.max_n < 15) throw InputError("max_n must be at least 15");
    if (options.max_n > kMaxOrder) throw InputError("max_n exceeds the maximum order");
    VerificationReport report;
    report.options = options;
    for (auto& claim : claim_registry(options)) {
        const auto start = std::chrono::steady_clock::now();
        ClaimOutcome outcome;
        try {
            outcome = claim.check();
        } catch (const std::exception& e) {
            outcome = ClaimOutcome::fail(e.what(), "unexpected exception");
        }
        if (outcome.status == ClaimStatus::fail && outcome.witness.empty()) outcome.witness = outcome.detail;
        const auto stop = std::chrono::steady_clock::now();
        report.claims.push_back({claim.id, claim.anchor, outcome.status, std::move(outcome.witness),
                                 std::move(outcome.detail),
                                 std::chrono::duration<double, std::milli>(stop - start).count()});
    }
    return report;
}

} // namespace chordext
