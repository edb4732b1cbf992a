#pragma once

// Seeded generation of chordal graphs by growing a perfect elimination
// ordering backwards: each new vertex is joined to a clique of the graph built
// so far, so it is simplicial when added and the reverse insertion order is a
// perfect elimination ordering. The distribution is biased (not uniform over
// chordal graphs).
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. The standard distributions are not, so bounded integers and
// Bernoulli draws are derived here: uniform_below uses rejection on the raw
// 64-bit output and bernoulli compares the top 53 bits against p. A seed
// therefore reproduces the same stream on every conforming platform.

#include "chordal.hpp"
#include "forbidden.hpp"
#include "graph.hpp"
#include "hamiltonian.hpp"
#include "metrics.hpp"
#include "strongly_chordal.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace chordext {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n); n > 0.
    std::uint64_t uniform_below(std::uint64_t n)
    {
        const std::uint64_t reject_from = -(-n % n); // largest multiple of n representable, 0 meaning 2^64
        std::uint64_t x = engine_();
        while (reject_from != 0 && x >= reject_from) x = engine_();
        return x % n;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& xs)
    {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[uniform_below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Extra class constraints on top of chordality.
struct ClassFilter {
    bool hamiltonian = false;
    bool strongly_chordal = false;
    std::vector<NamedPattern> forbidden;
    int min_connectivity = 0;
    std::optional<Rational> min_toughness;

    /// Empty when g passes, otherwise the first failed constraint.
    std::string rejection(const Graph& g) const
    {
        if (!is_chordal(g)) return "not chordal";
        for (const auto& p : forbidden) {
            if (contains_induced(p.graph, g)) return "contains " + p.name;
        }
        if (hamiltonian && !is_hamiltonian(g)) return "not Hamiltonian";
        if (strongly_chordal && find_sun(g)) return "contains a sun";
        if (min_connectivity > 0 && vertex_connectivity(g).value < min_connectivity) return "connectivity too low";
        if (min_toughness) {
            auto t = toughness(g);
            if (t && t->value < *min_toughness) return "toughness too low";
        }
        return {};
    }

    bool accepts(const Graph& g) const { return rejection(g).empty(); }
};

struct GenSpec {
    /// Order of every sample, or the lower end of the range when max_order is set.
    int order = 8;
    /// When greater than order, each sample's order is uniform in [order, max_order].
    int max_order = 0;
    /// Probability of keeping each further clique vertex; 1 gives K_n, 0 gives
    /// trees. Unset means a fresh uniform density per sample.
    std::optional<double> density;
    std::uint64_t seed = 0;
    ClassFilter filter;
    /// Rejected draws allowed per emitted graph before the stream reports exhaustion.
    std::size_t max_attempts = 200'000;
};

/// Unfiltered chordal graphs, one per next().
class ChordalStream {
public:
    explicit ChordalStream(GenSpec spec) : spec_(std::move(spec)), rng_(spec_.seed)
    {
        if (spec_.order < 1 || spec_.order > kMaxOrder || spec_.max_order > kMaxOrder) {
            throw InputError("generator order outside [1, " + std::to_string(kMaxOrder) + "]");
        }
        if (spec_.density && (*spec_.density < 0.0 || *spec_.density > 1.0)) {
            throw InputError("density must lie in [0, 1]");
        }
    }

    Graph next()
    {
        int n = spec_.order;
        if (spec_.max_order > spec_.order) {
            n += static_cast<int>(rng_.uniform_below(static_cast<std::uint64_t>(spec_.max_order - spec_.order + 1)));
        }
        const double p = spec_.density ? *spec_.density : rng_.unit();

        std::vector<VertexSet> adjacency(n);
        for (Vertex v = 1; v < n; ++v) {
            const Vertex u = static_cast<Vertex>(rng_.uniform_below(static_cast<std::uint64_t>(v)));
            std::vector<Vertex> pool = adjacency[u].to_vector();
            rng_.shuffle(pool);
            std::vector<Vertex> clique{u};
            VertexSet common = adjacency[u];
            for (Vertex w : pool) {
                if (common.contains(w)) {
                    clique.push_back(w);
                    common &= adjacency[w];
                }
            }
            std::size_t keep = 1;
            for (std::size_t i = 1; i < clique.size(); ++i) keep += rng_.bernoulli(p) ? 1 : 0;
            for (std::size_t i = 0; i < keep; ++i) {
                adjacency[v].insert(clique[i]);
                adjacency[clique[i]].insert(v);
            }
        }

        std::vector<Vertex> relabel(n);
        for (Vertex v = 0; v < n; ++v) relabel[v] = v;
        rng_.shuffle(relabel);
        std::vector<VertexSet> permuted(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w : adjacency[v]) permuted[relabel[v]].insert(relabel[w]);
        }
        return Graph::from_adjacency(std::move(permuted));
    }

    const GenSpec& spec() const { return spec_; }

private:
    GenSpec spec_;
    Rng rng_;
};

/// Chordal graphs passing spec.filter, by rejection.
class FilteredStream {
public:
    explicit FilteredStream(GenSpec spec) : source_(std::move(spec)) {}

    /// Next accepted graph; nothing once max_attempts draws in a row were rejected.
    std::optional<Graph> next()
    {
        for (std::size_t i = 0; i < source_.spec().max_attempts; ++i) {
            Graph g = source_.next();
            ++attempts_;
            if (source_.spec().filter.accepts(g)) {
                ++accepted_;
                return g;
            }
        }
        return std::nullopt;
    }

    std::size_t attempts() const { return attempts_; }
    std::size_t accepted() const { return accepted_; }
    double rejection_rate() const
    {
        return attempts_ == 0 ? 0.0 : 1.0 - static_cast<double>(accepted_) / static_cast<double>(attempts_);
    }

private:
    ChordalStream source_;
    std::size_t attempts_ = 0;
    std::size_t accepted_ = 0;
};

inline ChordalStream random_chordal(GenSpec spec) { return ChordalStream(std::move(spec)); }

/// Filtered stream with the Hamiltonian constraint switched on.
inline FilteredStream random_hamiltonian_chordal(GenSpec spec)
{
    spec.filter.hamiltonian = true;
    return FilteredStream(std::move(spec));
}

} // namespace chordext
