// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include <chordext/chordal.hpp>
#include <chordext/constructions.hpp>
#include <chordext/extendability.hpp>
#include <chordext/forbidden.hpp>
#include <chordext/graph6.hpp>
#include <chordext/metrics.hpp>
#include <chordext/random.hpp>
#include <chordext/strongly_chordal.hpp>
#include <chordext/verifier.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace chordext;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Median wall time of `runs` calls, in milliseconds.
double median_ms(int runs, const std::function<void()>& fn)
{
    std::vector<double> times;
    for (int i = 0; i < runs; ++i) {
        auto t = Clock::now();
        fn();
        times.push_back(ms_since(t));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "[exception: " << e.what() << "] ";
    }
    const double ms = ms_since(start);
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " -- " << o.detail.str() << "("
              << static_cast<long long>(ms) << " ms)" << std::endl;
}

const ClaimResult& claim(const VerificationReport& r, const std::string& id)
{
    if (const ClaimResult* c = r.find(id)) return *c;
    throw std::runtime_error("claim " + id + " missing from report");
}

} // namespace

int main()
{
    report(1, "H: 10 vertices, 29 edges, stored ordering perfect, chordal, a and e universal, < 1 ms", [](Outcome& o) {
        bool all = false;
        const double t = median_ms(7, [&] {
            BaseGraphH h = build_H();
            const Graph& g = h.graph;
            all = g.order() == 10 && g.size() == 29 && is_perfect_elimination(g, h.peo) && is_chordal(g) &&
                  g.degree(g["a"]) == 9 && g.degree(g["e"]) == 9;
        });
        BaseGraphH h = build_H();
        std::string order;
        for (Vertex v : h.peo) order += (order.empty() ? "" : ",") + h.graph.label(v);
        o.require(all, "structure");
        o.require(order == "f,g,z2,z1,b,a,c,d,e,h", "ordering is " + order);
        o.require(oracle::is_chordal(h.graph), "induced-cycle oracle");
        o.require(t < 1.0, "runtime");
        o.detail << "median " << t << " ms; ordering " << order << " ";
    });

    report(2, "C* Hamiltonian in H, C spans V(H) - {z1,z2}, both contain all 5 heavy edges", [](Outcome& o) {
        BaseGraphH h = build_H();
        const Graph& g = h.graph;
        o.require(h.cycle_cstar.is_hamiltonian_in(g), "C* Hamiltonian");
        o.require(h.cycle_c.is_cycle_of(g), "C is a cycle");
        o.require(h.cycle_c.vertex_set() == g.vertices() - g.set_of({"z1", "z2"}), "C spans V - {z1,z2}");
        o.require(h.heavy.size() == 5, "5 heavy edges");
        for (const Edge& e : h.heavy) {
            o.require(h.cycle_c.contains_edge(e) && h.cycle_cstar.contains_edge(e), "heavy " + edge_name(g, e));
        }
        o.detail << "C* = " << h.cycle_cstar.to_string(g) << "; C = " << h.cycle_c.to_string(g) << " ";
    });

    report(3, "no extension of C keeps every heavy edge (z1 and z2 both tried); C itself extends, < 100 ms", [](Outcome& o) {
        BaseGraphH h = build_H();
        const Graph& g = h.graph;
        std::optional<Cycle> with_heavy;
        ExtendabilityVerdict verdict;
        const double t = median_ms(5, [&] {
            with_heavy = extension_with_required_edges(g, h.cycle_c, h.heavy);
            verdict = is_cycle_extendable(g, h.cycle_c);
        });
        o.require(!with_heavy, "heavy-preserving extension found");
        for (auto z : {"z1", "z2"}) {
            o.require(!hamiltonian_cycle_in(g, h.cycle_c.vertex_set().with(g[z]), h.heavy), std::string("candidate ") + z);
            o.require(hamiltonian_cycle_in(g, h.cycle_c.vertex_set().with(g[z])).has_value(), std::string("free extension via ") + z);
        }
        o.require(verdict.extendable && verdict.extension && verdict.extension->is_cycle_of(g) &&
                      verdict.extension->vertex_set() == g.vertices() - g.set_of({"z2"}),
                  "unconstrained witness");
        o.require(t < 100.0, "runtime");
        if (verdict.extension) o.detail << "witness " << verdict.extension->to_string(g) << "; ";
        o.detail << "median " << t << " ms ";
    });

    report(4, "n = 15..18: chordal, Hamiltonian, D of length n-2 not extendable (both candidates exhausted), < 60 s",
           [](Outcome& o) {
               auto start = Clock::now();
               for (int n = 15; n <= 18; ++n) {
                   Counterexample ce = build_counterexample(n);
                   Certification c = certify(ce);
                   const std::string tag = "n=" + std::to_string(n);
                   o.require(c.ok(), tag + " " + c.summary(ce.graph));
                   o.require(ce.graph.order() == n && ce.d_cycle.length() == n - 2, tag + " sizes");
                   o.require(c.verdict && c.verdict->exhausted_candidates.size() == 2, tag + " candidates");
                   for (Vertex v : ce.graph.vertices() - ce.d_cycle.vertex_set()) {
                       o.require(!hamiltonian_cycle_in(ce.graph, ce.d_cycle.vertex_set().with(v)), tag + " extension via " + ce.graph.label(v));
                   }
                   o.detail << tag << " " << encode_graph6(ce.graph) << "; ";
               }
               const double t = ms_since(start);
               o.require(t < 60'000.0, "runtime");
           });

    report(5, "ratio construction k = 3, 10, 25: order 13+k, D of length 13 not extendable, ratio falls below every tested alpha",
           [](Outcome& o) {
               std::vector<double> ratios;
               for (int k : {3, 10, 25}) {
                   Counterexample ce = build_ratio_counterexample(15, k);
                   o.require(certify(ce).ok(), "k=" + std::to_string(k) + " certification");
                   o.require(ce.graph.order() == 13 + k && ce.d_cycle.length() == 13, "k=" + std::to_string(k) + " sizes");
                   ratios.push_back(13.0 / ce.graph.order());
                   o.detail << "k=" << k << " ratio 13/" << ce.graph.order() << "; ";
               }
               o.require(std::is_sorted(ratios.rbegin(), ratios.rend()) && ratios[0] > ratios[1] && ratios[1] > ratios[2], "decreasing");
               for (double alpha : {0.9, 0.75, 0.5, 0.35}) {
                   o.require(std::any_of(ratios.begin(), ratios.end(), [&](double r) { return r < alpha; }),
                             "alpha " + std::to_string(alpha));
               }
           });

    report(6, "generalized pasting with five K4 and with five diamonds certifies", [](Outcome& o) {
        ConstructionSpec k4;
        k4.heavy_pastes.fill(CliquePaste{4});
        ConstructionSpec diamond;
        diamond.heavy_pastes.fill(GraphPaste{pattern("diamond").graph, 0, 1, Cycle({0, 1, 3, 2})});
        for (auto* spec : {&k4, &diamond}) {
            Counterexample ce = detail::assemble(*spec, build_H());
            Certification c = certify(ce);
            o.require(c.ok(), c.summary(ce.graph));
            o.detail << "order " << ce.graph.order() << ", |D| " << ce.d_cycle.length() << "; ";
        }
    });

    report(7, "H+ has the 3-sun {a,b,f,g,h,x}, is not strongly chordal, and sits induced in the n = 15, 16 counterexamples",
           [](Outcome& o) {
               Graph hp = build_H_plus();
               auto sun = find_sun(hp);
               o.require(sun && sun->k == 3 && sun->vertices == hp.set_of({"a", "b", "f", "g", "h", "x"}), "sun");
               o.require(!is_strongly_chordal(hp), "H+ strongly chordal");
               o.require(!oracle::is_strongly_chordal(hp), "odd-chord oracle");
               for (int n : {15, 16}) {
                   Graph g = build_counterexample(n).graph;
                   auto at = contains_induced(hp, g);
                   o.require(at.has_value(), "H+ in n=" + std::to_string(n));
                   o.require(!is_strongly_chordal(g), "n=" + std::to_string(n) + " strongly chordal");
                   if (at) o.detail << "n=" << n << " at " << format_set(g, *at) << "; ";
               }
           });

    report(8, "longest induced path 7 in H and 9 in H*; H* is P10-free; H* audit fails with witness V - {z1,z2}", [](Outcome& o) {
        Graph hs = build_H_star();
        const int lh = longest_induced_path(build_H().graph).length;
        const int ls = longest_induced_path(hs).length;
        std::vector<NamedPattern> p10{pattern("P10")};
        o.require(lh == 7, "H path " + std::to_string(lh));
        o.require(ls == 9, "H* path " + std::to_string(ls));
        o.require(oracle::longest_induced_path(build_H().graph) == 7, "subset oracle on H");
        o.require(is_free(hs, p10), "P10");
        auto rep = is_fully_cycle_extendable(hs);
        o.require(rep.status == AuditStatus::fail, "audit status");
        o.require(rep.witness_set && *rep.witness_set == hs.vertices() - hs.set_of({"z1", "z2"}), "witness set");
        o.detail << "audit: " << rep.non_extendable_count << " of " << rep.cyclable_set_count << " cyclable sets non-extendable ";
    });

    report(9, "n = 15, 16: vertex connectivity 2 and toughness exactly 1, < 120 s", [](Outcome& o) {
        auto start = Clock::now();
        for (int n : {15, 16}) {
            Graph g = build_counterexample(n).graph;
            auto k = vertex_connectivity(g);
            auto t = toughness(g);
            o.require(k.value == 2, "n=" + std::to_string(n) + " connectivity " + std::to_string(k.value));
            o.require(t && t->value == Rational(1), "n=" + std::to_string(n) + " toughness");
            o.require(k.cut.size() == 2 && !connected(g, g.vertices() - k.cut), "cut witness");
            if (t) o.detail << "n=" << n << " cut " << format_set(g, k.cut) << ", tough cut " << format_set(g, t->cut) << "; ";
        }
        o.require(ms_since(start) < 120'000.0, "runtime");
    });

    report(10, ">= 10^4 random graphs of order <= 9: chordality, Hamiltonicity, induced containment, connectivity vs oracles",
           [](Outcome& o) {
               Rng rng(0xacce97);
               const std::vector<std::string> names{"P3", "P4", "P5", "claw", "bull", "diamond", "C4", "C5", "K4", "hourglass", "K1,4+e", "sun3"};
               int graphs = 0;
               int disagreements = 0;
               int chordal = 0;
               int hamiltonian = 0;
               for (; graphs < 10'000; ++graphs) {
                   const int n = 1 + static_cast<int>(rng.uniform_below(9));
                   Graph g = (graphs % 2 == 0) ? oracle::gnp(rng, n, rng.unit())
                                               : ChordalStream(GenSpec{n, 0, std::nullopt, rng.next()}).next();
                   const Graph& p = pattern(names[rng.uniform_below(names.size())]).graph;
                   const bool c = is_chordal(g);
                   const bool h = n >= 3 && is_hamiltonian(g).has_value();
                   chordal += c ? 1 : 0;
                   hamiltonian += h ? 1 : 0;
                   bool agree = c == oracle::is_chordal(g);
                   agree = agree && h == (n >= 3 && oracle::is_hamiltonian(g));
                   agree = agree && contains_induced(p, g).has_value() == oracle::contains_induced(p, g);
                   agree = agree && (n < 2 || vertex_connectivity(g).value == oracle::vertex_connectivity(g));
                   if (!agree) {
                       ++disagreements;
                       if (disagreements <= 3) o.detail << "disagreement on " << encode_graph6(g) << "; ";
                   }
               }
               o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
               o.detail << graphs << " graphs (" << chordal << " chordal, " << hamiltonian << " Hamiltonian), 0 disagreements ";
           });

    VerifyOptions standard;  // 500 samples per suite, orders 6-12, max_n 18
    const VerificationReport full = verify_all(standard);

    report(11, "propositions on 500 samples each at orders 6-12: simplicial deletion, pancyclicity, common neighbour, "
               "2-connected iff locally connected, separators",
           [&](Outcome& o) {
               for (const char* id : {"random.simplicial_reduction", "random.pancyclic", "random.common_neighbour",
                                      "random.local_connectivity", "random.separators"}) {
                   const ClaimResult& c = claim(full, id);
                   o.require(c.status == ClaimStatus::pass, std::string(id) + " " + c.detail + " " + c.witness);
                   o.require(c.detail.starts_with("500 samples"), std::string(id) + " sample count");
                   o.detail << id << ": " << c.detail << "; ";
               }
           });

    report(12, "theorem suites (>= 300 samples, order <= 12): P5-free, {bull,K1,5}-free, {bull,K2vP5}-free all fully extendable",
           [&](Outcome& o) {
               for (const char* id : {"random.p5_free", "random.bull_k15_free", "random.bull_k2p5_free"}) {
                   const ClaimResult& c = claim(full, id);
                   o.require(c.status == ClaimStatus::pass, std::string(id) + " " + c.detail + " " + c.witness);
                   std::size_t samples = 0;
                   std::size_t draws = 0;
                   std::sscanf(c.detail.c_str(), "%zu samples at orders 6-12, %zu draws", &samples, &draws);
                   o.require(samples >= 300, std::string(id) + " sample count");
                   o.detail << id << ": " << samples << " samples, rejection rate "
                            << (draws ? 1.0 - static_cast<double>(samples) / static_cast<double>(draws) : 0.0) << "; ";
               }
           });

    report(13, "negative controls: without edge gh, or with gh no longer heavy, the heavy-edge and counterexample claims fail",
           [&](Outcome& o) {
               const std::vector<std::string> flipped{"H.heavy_lemma", "counterexample.n15", "counterexample.n16",
                                                      "counterexample.n17", "counterexample.n18"};
               for (const auto& id : flipped) o.require(claim(full, id).status == ClaimStatus::pass, id + " baseline");

               BaseGraphH h = build_H();
               const Edge gh(h.graph["g"], h.graph["h"]);
               VerifyOptions mutated;
               mutated.samples = 0;
               for (auto [name, base] : {std::pair{"edge removed", with_edge_removed(h, gh)},
                                         std::pair{"heavy dropped", with_heavy_dropped(h, gh)}}) {
                   mutated.base = base;
                   VerificationReport r = verify_all(mutated);
                   for (const auto& id : flipped) {
                       const ClaimResult& c = claim(r, id);
                       o.require(c.status == ClaimStatus::fail && !c.witness.empty(), std::string(name) + ": " + id);
                   }
                   o.detail << name << ": heavy lemma witness " << claim(r, "H.heavy_lemma").witness << "; ";
               }
           });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
