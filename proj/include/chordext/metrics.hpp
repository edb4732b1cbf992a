#pragma once

#include "extendability.hpp"
#include "graph.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace chordext {

/// Reduced fraction with positive denominator.
class Rational {
public:
    constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den)
    {
        if (den_ == 0) throw InputError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool operator==(const Rational&) const = default;
    constexpr std::strong_ordering operator<=>(const Rational& o) const { return num_ * o.den_ <=> o.num_ * den_; }

    std::string to_string() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

struct ConnectivityResult {
    int value = 0;
    /// Minimum vertex cut; empty for complete and disconnected graphs.
    VertexSet cut;
};

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths and a minimum
/// s-t vertex separator, by unit-capacity augmenting paths on the split graph
/// (v_in = 2v, v_out = 2v + 1).
inline std::pair<int, VertexSet> menger(const Graph& g, Vertex s, Vertex t)
{
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int x, int y) -> int& { return cap[static_cast<std::size_t>(x * nodes + y)]; };
    for (Vertex v = 0; v < n; ++v) {
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
        for (Vertex w : g.neighbours(v)) at(2 * v + 1, 2 * w) = n;
    }

    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(nodes);
    while (true) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[sink] < 0) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < nodes; ++y) {
                if (parent[y] < 0 && at(x, y) > 0) {
                    parent[y] = x;
                    q.push(y);
                }
            }
        }
        if (parent[sink] < 0) break;
        for (int y = sink; y != source; y = parent[y]) {
            --at(parent[y], y);
            ++at(y, parent[y]);
        }
        ++flow;
    }

    // Cut: vertices whose in-node is reachable from the source but out-node is not.
    VertexSet cut;
    for (Vertex v = 0; v < n; ++v) {
        if (parent[2 * v] >= 0 && parent[2 * v + 1] < 0) cut.insert(v);
    }
    return {flow, cut};
}

} // namespace detail

/// Minimum vertex cut size with a witness. Complete graphs report order - 1
/// with an empty cut; disconnected graphs report 0.
inline ConnectivityResult vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (n == 0) return {0, {}};
    if (!connected(g)) return {0, {}};
    ConnectivityResult best{n - 1, {}};
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t : g.vertices() - g.neighbours(s) - VertexSet::range(s + 1)) {
            auto [value, cut] = detail::menger(g, s, t);
            if (value < best.value) best = {value, cut};
        }
    }
    return best;
}

struct ToughnessCertificate {
    Rational value;
    VertexSet cut;
    int component_count = 0;
};

/// Exact toughness: min |X| / c(G - X) over vertex cuts X. Nothing for
/// complete graphs, which have no vertex cut.
///
/// Cuts are enumerated by increasing size; a cut of size s leaves at most
/// n - s components, so the search stops once s / (n - s) reaches the best
/// ratio found.
inline std::optional<ToughnessCertificate> toughness(const Graph& g)
{
    const int n = g.order();
    std::optional<ToughnessCertificate> best;
    if (n >= 2 && !connected(g)) best = ToughnessCertificate{Rational(0), {}, component_count(g, g.vertices())};
    for (int s = 1; s + 2 <= n; ++s) {
        if (best && Rational(s, n - s) >= best->value) break;
        for_each_subset_of_size(n, s, [&](VertexSet cut) {
            const int c = component_count(g, g.vertices() - cut);
            if (c < 2) return true;
            Rational r(s, c);
            if (!best || r < best->value) best = ToughnessCertificate{r, cut, c};
            return true;
        });
    }
    return best;
}

} // namespace chordext
