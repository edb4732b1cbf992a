// chordext: construct, verify, check and explore Hamiltonian chordal graphs.
//
// Exit status: 0 all pass, 1 any fail, 2 inconclusive only, 64 usage error.

#include <chordext/chordal.hpp>
#include <chordext/constructions.hpp>
#include <chordext/dot.hpp>
#include <chordext/explore.hpp>
#include <chordext/extendability.hpp>
#include <chordext/forbidden.hpp>
#include <chordext/graph6.hpp>
#include <chordext/metrics.hpp>
#include <chordext/strongly_chordal.hpp>
#include <chordext/verifier.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chordext;

constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- construct

Paste paste_from_json(const nlohmann::json& j)
{
    const std::string type = j.value("type", "clique");
    if (type == "clique") return CliquePaste{j.value("size", 3)};
    Graph host;
    if (type == "pattern") {
        host = pattern(j.at("name").get<std::string>()).graph;
    } else if (type == "graph") {
        host = decode_graph6(j.at("graph6").get<std::string>());
    } else {
        throw UsageError("unknown paste type '" + type + "'");
    }
    auto glue = j.value("glue", std::vector<int>{0, 1});
    if (glue.size() != 2) throw UsageError("glue must list two vertices");
    std::optional<Cycle> witness;
    if (j.contains("cycle")) {
        witness = Cycle(j.at("cycle").get<std::vector<Vertex>>());
    } else {
        const Edge e(glue[0], glue[1]);
        witness = hamiltonian_cycle_in(host, host.vertices(), std::span<const Edge>(&e, 1));
        if (!witness) throw UsageError("paste host has no Hamiltonian cycle through its glue edge");
    }
    return GraphPaste{std::move(host), glue[0], glue[1], std::move(*witness)};
}

/// {"pastes": [five paste objects], "z1z2": {"size": k}}; a paste object is
/// {"type": "clique", "size": s}, {"type": "pattern", "name": "diamond"} or
/// {"type": "graph", "graph6": "...", "glue": [u, v], "cycle": [...]}.
ConstructionSpec spec_from_json(const nlohmann::json& j)
{
    ConstructionSpec spec;
    const auto& pastes = j.at("pastes");
    if (!pastes.is_array() || pastes.size() != spec.heavy_pastes.size()) throw UsageError("spec needs exactly five pastes");
    for (std::size_t i = 0; i < spec.heavy_pastes.size(); ++i) spec.heavy_pastes[i] = paste_from_json(pastes[i]);
    if (j.contains("z1z2") && !j.at("z1z2").is_null()) spec.z12_paste = CliquePaste{j.at("z1z2").value("size", 3)};
    return spec;
}

struct ConstructArgs {
    std::string target;
    int n = 15;
    int k = 3;
    std::string spec_file;
    std::string format = "g6";
    std::string out;
};

int run_construct(const ConstructArgs& a)
{
    Graph g;
    std::vector<Edge> marked;
    VertexSet marked_vertices;
    if (a.target == "H") {
        BaseGraphH h = build_H();
        g = h.graph;
        marked.assign(h.heavy.begin(), h.heavy.end());
    } else if (a.target == "H+") {
        g = build_H_plus();
    } else if (a.target == "Hstar" || a.target == "counterexample" || a.target == "ratio" || a.target == "generalized") {
        Counterexample ce = a.target == "Hstar"            ? build_counterexample(15)
                            : a.target == "counterexample" ? build_counterexample(a.n)
                            : a.target == "ratio"          ? build_ratio_counterexample(a.n, a.k)
                                                           : build_generalized(spec_from_json(nlohmann::json::parse(read_file(a.spec_file))));
        g = ce.graph;
        marked = ce.d_cycle.edges();
        marked_vertices = ce.off_d;
    } else {
        throw UsageError("unknown construction '" + a.target + "'");
    }
    write_output(a.out, a.format == "dot" ? export_dot(g, marked, marked_vertices) : encode_graph6(g) + "\n");
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    int max_n = 18;
    std::size_t samples = 500;
    std::optional<std::uint64_t> seed;
    std::string json_out;
    bool quiet = false;
};

int run_verify(const VerifyArgs& a)
{
    VerifyOptions o;
    o.max_n = a.max_n;
    o.samples = a.samples;
    if (a.seed) o.seed = *a.seed;
    VerificationReport report = verify_all(o);
    if (!a.quiet) std::cout << report.to_text();
    if (!a.json_out.empty()) write_output(a.json_out, report.to_json().dump(2) + "\n");
    return report.exit_code();
}

// ---------------------------------------------------------------- check

/// "chordal,hamiltonian,free=P5,bull" -> properties plus the free list; tokens
/// after free= that are not property names extend the free list.
struct PropList {
    std::vector<std::string> props;
    std::vector<std::string> free;
};

const std::vector<std::string>& known_props()
{
    static const std::vector<std::string> names{"chordal",  "strongly-chordal", "hamiltonian",  "pancyclic",
                                                "fully-extendable", "toughness", "connectivity", "locally-connected",
                                                "longest-induced-path"};
    return names;
}

PropList parse_props(const std::string& text)
{
    PropList out;
    bool in_free = false;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.rfind("free=", 0) == 0) {
            in_free = true;
            tok = tok.substr(5);
            if (tok.empty()) continue;
            pattern(tok);
            out.free.push_back(tok);
        } else if (std::find(known_props().begin(), known_props().end(), tok) != known_props().end()) {
            in_free = false;
            out.props.push_back(tok);
        } else if (in_free) {
            pattern(tok);
            out.free.push_back(tok);
        } else {
            throw UsageError("unknown property '" + tok + "'");
        }
    }
    if (out.props.empty() && out.free.empty()) throw UsageError("no properties requested");
    return out;
}

int run_check(const std::string& file, const std::string& props_text, bool json)
{
    const PropList pl = parse_props(props_text);
    const Graph g = decode_graph6(read_file(file));
    nlohmann::json results = nlohmann::json::array();
    int worst = 0;
    auto record = [&](const std::string& prop, const char* status, const std::string& detail) {
        results.push_back({{"property", prop}, {"status", status}, {"detail", detail}});
        if (std::string_view(status) == "fail") worst = 1;
        if (std::string_view(status) == "inconclusive" && worst == 0) worst = 2;
    };
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };

    for (const auto& p : pl.props) {
        if (p == "chordal") {
            record(p, verdict(is_chordal(g)), "");
        } else if (p == "strongly-chordal") {
            auto sun = is_chordal(g) ? find_sun(g) : std::nullopt;
            const bool ok = is_chordal(g) && !sun;
            record(p, verdict(ok), sun ? std::to_string(sun->k) + "-sun " + format_set(g, sun->vertices) : "");
        } else if (p == "hamiltonian") {
            auto c = is_hamiltonian(g);
            record(p, verdict(c.has_value()), c ? c->to_string(g) : "");
        } else if (p == "pancyclic") {
            record(p, verdict(is_pancyclic(g)), "");
        } else if (p == "fully-extendable") {
            auto rep = is_fully_cycle_extendable(g);
            std::string detail;
            if (rep.witness_set) detail = "non-extendable set " + format_set(g, *rep.witness_set);
            if (!rep.outside_triangles.empty()) detail = "not on a triangle: " + format_set(g, rep.outside_triangles);
            record(p, to_string(rep.status), detail);
        } else if (p == "toughness") {
            auto t = toughness(g);
            record(p, "pass", t ? t->value.to_string() + " via cut " + format_set(g, t->cut) : "complete graph (no cut)");
        } else if (p == "connectivity") {
            auto k = vertex_connectivity(g);
            record(p, "pass", std::to_string(k.value) + (k.cut.empty() ? "" : " via cut " + format_set(g, k.cut)));
        } else if (p == "locally-connected") {
            record(p, verdict(is_locally_connected(g)), "");
        } else if (p == "longest-induced-path") {
            record(p, "pass", std::to_string(longest_induced_path(g).length));
        }
    }
    for (const auto& name : pl.free) {
        auto hit = contains_induced(pattern(name).graph, g);
        record("free=" + name, verdict(!hit), hit ? "induced on " + format_set(g, *hit) : "");
    }

    if (json) {
        std::cout << nlohmann::json{{"graph6", encode_graph6(g)}, {"results", results}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r["property"].get<std::string>() << ": " << r["status"].get<std::string>();
            if (!r["detail"].get<std::string>().empty()) std::cout << "  (" << r["detail"].get<std::string>() << ")";
            std::cout << "\n";
        }
    }
    return worst;
}

// ---------------------------------------------------------------- explore

struct ExploreArgs {
    std::string question;
    int order = 12;
    int min_order = 6;
    std::size_t budget = 1000;
    std::uint64_t seed = default_seed();
    std::vector<std::string> inject;
    std::string witness_out;
    std::string json_out;
};

int run_explore(const ExploreArgs& a)
{
    const Question q = parse_question(a.question);
    GenSpec spec;
    spec.order = std::min(a.min_order, a.order);
    spec.max_order = a.order;
    spec.seed = a.seed;
    ExploreOptions opts;
    for (const auto& file : a.inject) opts.injected.push_back(decode_graph6(read_file(file)));
    ExplorationReport r = explore_question(q, spec, a.budget, opts);
    std::cout << r.to_text();
    if (!a.json_out.empty()) write_output(a.json_out, r.to_json().dump(2) + "\n");
    if (r.counterexample && !a.witness_out.empty()) {
        write_output(a.witness_out, r.counterexample_graph6() + "\n");
        std::cout << "witness written to " << a.witness_out << "\n";
    }
    switch (r.status) {
    case ExploreStatus::counterexample_found: return 1;
    case ExploreStatus::no_counterexample: return 0;
    case ExploreStatus::inconclusive: return 2;
    }
    return 2;
}

// ---------------------------------------------------------------- atlas

int run_atlas(bool dump)
{
    for (const auto& p : atlas()) {
        if (dump) std::cout << p.name << "\t" << encode_graph6(p.graph) << "\n";
        else std::cout << p.name << "\t" << p.graph.order() << " vertices, " << p.graph.size() << " edges\t" << p.description << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Constructions and checks for Hamiltonian chordal graphs with non-extendable cycles", "chordext"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Write a construction as graph6 or DOT");
    construct->add_option("target", ca.target, "H, H+, Hstar, counterexample, ratio or generalized")
        ->required()
        ->check(CLI::IsMember({"H", "H+", "Hstar", "counterexample", "ratio", "generalized"}));
    construct->add_option("--n", ca.n, "Order of the counterexample, or of the base for ratio (>= 15)");
    construct->add_option("--k", ca.k, "Clique size pasted on z1z2 (ratio)");
    construct->add_option("--spec-file", ca.spec_file, "JSON paste specification (generalized)");
    construct->add_option("--format", ca.format, "g6 or dot")->check(CLI::IsMember({"g6", "dot"}));
    construct->add_option("--out", ca.out, "Output path (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the claim registry");
    verify->add_option("--max-n", va.max_n, "Largest counterexample order checked (>= 15)");
    verify->add_option("--samples", va.samples, "Samples per randomized claim");
    verify->add_option("--seed", va.seed, std::string("Base seed (default from ") + kSeedEnvVar + " or built in)");
    verify->add_option("--json", va.json_out, "Write the JSON report here");
    verify->add_flag("--quiet", va.quiet, "Suppress the text report");

    std::string check_file;
    std::string check_props = "chordal,hamiltonian";
    bool check_json = false;
    auto* check = app.add_subcommand("check", "Test properties of a graph6 graph");
    check->add_option("file", check_file, "graph6 file")->required();
    check->add_option("--props", check_props, "Comma list; free=P5,bull,... for forbidden patterns");
    check->add_flag("--json", check_json, "JSON output");

    ExploreArgs ea;
    auto* explore = app.add_subcommand("explore", "Search a class for graphs that are not fully cycle extendable");
    explore->add_option("--question", ea.question, "q1, pr:<r>, kconn:<k> or tough:<t>")->required();
    explore->add_option("--order", ea.order, "Largest sample order");
    explore->add_option("--min-order", ea.min_order, "Smallest sample order");
    explore->add_option("--budget", ea.budget, "Graphs to audit");
    explore->add_option("--seed", ea.seed, "Generator seed");
    explore->add_option("--inject", ea.inject, "graph6 files audited before random samples");
    explore->add_option("--witness", ea.witness_out, "Write a found counterexample (graph6) here");
    explore->add_option("--json", ea.json_out, "Write the JSON report here");

    bool atlas_list = false;
    bool atlas_dump = false;
    auto* atlas_cmd = app.add_subcommand("atlas", "List the named forbidden patterns");
    atlas_cmd->add_flag("--list", atlas_list, "Names and sizes (default)");
    atlas_cmd->add_flag("--dump", atlas_dump, "Names and graph6 encodings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (check->parsed()) return run_check(check_file, check_props, check_json);
        if (explore->parsed()) return run_explore(ea);
        if (atlas_cmd->parsed()) return run_atlas(atlas_dump && !atlas_list);
    } catch (const UsageError& e) {
        std::cerr << "chordext: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chordext::ParseError& e) {
        std::cerr << "chordext: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "chordext: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "chordext: bad JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "chordext: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
