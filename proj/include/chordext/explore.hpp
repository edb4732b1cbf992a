#pragma once

// Randomized search for graphs that are not fully cycle extendable inside a
// restricted class of Hamiltonian chordal graphs. Finding none within the
// budget says nothing about the class in general.

#include "extendability.hpp"
#include "forbidden.hpp"
#include "graph6.hpp"
#include "metrics.hpp"
#include "random.hpp"

#include <json.hpp>

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace chordext {

enum class QuestionKind { strongly_chordal, path_free, k_connected, t_tough };

struct Question {
    QuestionKind kind = QuestionKind::strongly_chordal;
    int r = 0;             // path_free: forbid P_r
    int k = 0;             // k_connected
    Rational t{1};         // t_tough

    /// Canonical command-line spelling: q1, pr:<r>, kconn:<k>, tough:<t>.
    std::string name() const
    {
        switch (kind) {
        case QuestionKind::strongly_chordal: return "q1";
        case QuestionKind::path_free: return "pr:" + std::to_string(r);
        case QuestionKind::k_connected: return "kconn:" + std::to_string(k);
        case QuestionKind::t_tough: return "tough:" + t.to_string();
        }
        return "?";
    }

    std::string describe() const
    {
        switch (kind) {
        case QuestionKind::strongly_chordal: return "Hamiltonian strongly chordal graphs";
        case QuestionKind::path_free: return "P" + std::to_string(r) + "-free Hamiltonian chordal graphs";
        case QuestionKind::k_connected: return std::to_string(k) + "-connected Hamiltonian chordal graphs";
        case QuestionKind::t_tough: return t.to_string() + "-tough Hamiltonian chordal graphs";
        }
        return "?";
    }

    /// The class as a generator filter (always Hamiltonian).
    ClassFilter filter() const
    {
        ClassFilter f;
        f.hamiltonian = true;
        switch (kind) {
        case QuestionKind::strongly_chordal: f.strongly_chordal = true; break;
        case QuestionKind::path_free: f.forbidden.push_back(pattern("P" + std::to_string(r))); break;
        case QuestionKind::k_connected: f.min_connectivity = k; break;
        case QuestionKind::t_tough: f.min_toughness = t; break;
        }
        return f;
    }
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) throw InputError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

/// "3", "3/2" or "1.25".
inline Rational parse_rational(std::string_view s)
{
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(s.substr(0, slash), "numerator"), parse_int(s.substr(slash + 1), "denominator"));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) throw InputError("bad toughness: '" + std::string(s) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const int whole = dot == 0 ? 0 : parse_int(s.substr(0, dot), "toughness");
        return Rational(whole * den + parse_int(frac, "toughness"), den);
    }
    return Rational(parse_int(s, "toughness"));
}

} // namespace detail

inline Question parse_question(std::string_view text)
{
    Question q;
    if (text == "q1" || text == "strongly_chordal") return q;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("unknown question '" + std::string(text) + "'");
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg = text.substr(colon + 1);
    if (head == "pr") {
        q.kind = QuestionKind::path_free;
        q.r = detail::parse_int(arg, "r");
        if (q.r < 2 || q.r > kMaxOrder) throw InputError("r must lie in [2, 64]");
    } else if (head == "kconn") {
        q.kind = QuestionKind::k_connected;
        q.k = detail::parse_int(arg, "k");
        if (q.k < 1) throw InputError("k must be positive");
    } else if (head == "tough") {
        q.kind = QuestionKind::t_tough;
        q.t = detail::parse_rational(arg);
        if (q.t <= Rational(0)) throw InputError("t must be positive");
    } else {
        throw InputError("unknown question '" + std::string(text) + "'");
    }
    return q;
}

enum class ExploreStatus { counterexample_found, no_counterexample, inconclusive };

inline const char* to_string(ExploreStatus s)
{
    switch (s) {
    case ExploreStatus::counterexample_found: return "counterexample_found";
    case ExploreStatus::no_counterexample: return "no_counterexample_in_budget";
    case ExploreStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ExploreOptions {
    /// Tested before any random sample; graphs outside the class are skipped.
    std::vector<Graph> injected;
    AuditOptions audit;
};

struct ExplorationReport {
    Question question;
    ExploreStatus status = ExploreStatus::inconclusive;
    std::size_t budget = 0;
    std::size_t samples_tested = 0;
    std::size_t injected_tested = 0;
    std::size_t injected_skipped = 0;
    std::size_t audits_inconclusive = 0;
    std::size_t draws = 0;
    double rejection_rate = 0.0;
    bool generator_exhausted = false;
    std::optional<Graph> counterexample;
    std::optional<VertexSet> witness_set;
    std::optional<Cycle> witness_cycle;
    /// Set when the counterexample answers an open question (q1) negatively.
    bool research_grade = false;

    std::string counterexample_graph6() const { return counterexample ? encode_graph6(*counterexample) : std::string{}; }

    /// Fields: question, class, status, budget, samples_tested, injected_tested,
    /// injected_skipped, audits_inconclusive, draws, rejection_rate,
    /// generator_exhausted, research_grade, counterexample{graph6, witness_set, witness_cycle}.
    nlohmann::json to_json() const
    {
        nlohmann::json j{{"question", question.name()},
                         {"class", question.describe()},
                         {"status", to_string(status)},
                         {"budget", budget},
                         {"samples_tested", samples_tested},
                         {"injected_tested", injected_tested},
                         {"injected_skipped", injected_skipped},
                         {"audits_inconclusive", audits_inconclusive},
                         {"draws", draws},
                         {"rejection_rate", rejection_rate},
                         {"generator_exhausted", generator_exhausted},
                         {"research_grade", research_grade},
                         {"counterexample", nullptr}};
        if (counterexample) {
            j["counterexample"] = {{"graph6", counterexample_graph6()},
                                   {"witness_set", witness_set ? format_set(*counterexample, *witness_set) : ""},
                                   {"witness_cycle", witness_cycle ? witness_cycle->to_string(*counterexample) : ""}};
        }
        return j;
    }

    std::string to_text() const
    {
        std::ostringstream out;
        if (research_grade) {
            out << "************************************************************\n"
                << "* RESEARCH-GRADE FINDING: counterexample for " << question.name() << "\n"
                << "************************************************************\n";
        }
        out << "question " << question.name() << " (" << question.describe() << ")\n";
        out << "status: " << to_string(status) << "\n";
        out << "samples tested: " << samples_tested << " of " << budget << " (" << injected_tested << " injected, " << draws
            << " random draws, rejection rate " << rejection_rate << ")\n";
        if (audits_inconclusive > 0) out << "inconclusive audits: " << audits_inconclusive << "\n";
        if (generator_exhausted) out << "generator exhausted before the budget was spent\n";
        if (counterexample) {
            out << "counterexample (graph6): " << counterexample_graph6() << "\n";
            if (witness_set) out << "non-extendable cycle on " << format_set(*counterexample, *witness_set) << "\n";
            if (witness_cycle) out << "witness cycle: " << witness_cycle->to_string(*counterexample) << "\n";
        } else if (status == ExploreStatus::no_counterexample) {
            out << "no counterexample in budget\n";
        }
        return out.str();
    }
};

/// Audits up to `budget` graphs of the question's class (injected graphs
/// first, then samples from spec) and stops at the first one that is not fully
/// cycle extendable. spec.filter is replaced by the question's filter.
inline ExplorationReport explore_question(const Question& question, GenSpec spec, std::size_t budget,
                                          const ExploreOptions& options = {})
{
    ExplorationReport report;
    report.question = question;
    report.budget = budget;
    spec.filter = question.filter();

    auto audit = [&](const Graph& g) {
        ++report.samples_tested;
        auto rep = is_fully_cycle_extendable(g, options.audit);
        if (rep.status == AuditStatus::inconclusive) {
            ++report.audits_inconclusive;
            return false;
        }
        if (rep.status == AuditStatus::pass) return false;
        report.counterexample = g;
        report.witness_set = rep.witness_set;
        report.witness_cycle = rep.witness_cycle;
        return true;
    };

    bool found = false;
    for (const Graph& g : options.injected) {
        if (found || report.samples_tested >= budget) break;
        if (!spec.filter.accepts(g)) {
            ++report.injected_skipped;
            continue;
        }
        ++report.injected_tested;
        found = audit(g);
    }

    FilteredStream stream(spec);
    while (!found && report.samples_tested < budget) {
        auto g = stream.next();
        if (!g) {
            report.generator_exhausted = true;
            break;
        }
        found = audit(*g);
    }
    report.draws = stream.attempts();
    report.rejection_rate = stream.rejection_rate();

    if (found) {
        report.status = ExploreStatus::counterexample_found;
        report.research_grade = question.kind == QuestionKind::strongly_chordal;
    } else if (report.generator_exhausted || report.audits_inconclusive > 0 || report.samples_tested < budget) {
        report.status = ExploreStatus::inconclusive;
    } else {
        report.status = ExploreStatus::no_counterexample;
    }
    return report;
}

} // namespace chordext
