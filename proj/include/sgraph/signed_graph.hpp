#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgraph {

/// Edge label of a signed graph: each edge is either positive or negative.
enum class Sign : int { positive = 1, negative = -1 };

constexpr Sign opposite(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

/// +1 for positive, -1 for negative.
constexpr int sign_value(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_value(int v) {
    if (v == 1) return Sign::positive;
    if (v == -1) return Sign::negative;
    throw std::domain_error("sign_from_value: expected 1 or -1, got " + std::to_string(v));
}

/// Simple undirected graph whose edges carry a sign. Vertices are the dense
/// indices 0..order-1. Edge keys are normalized to (min(u,v), max(u,v)); no
/// loops, no multi-edges. add_edge is the only mutator and rejects duplicate
/// pairs, so a fully built graph can be shared freely.
class SignedGraph {
public:
    using EdgeKey = std::pair<int, int>;
    using EdgeMap = std::map<EdgeKey, Sign>;

    SignedGraph() = default;

    explicit SignedGraph(int order) : order_(order) {
        if (order < 0) throw std::domain_error("SignedGraph: negative order");
    }

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges in canonical (lexicographic) order.
    const EdgeMap& edges() const { return edges_; }

    void add_edge(int u, int v, Sign sign) {
        require_vertex(u);
        require_vertex(v);
        if (u == v)
            throw std::domain_error("add_edge: loop at vertex " + std::to_string(u));
        auto [it, inserted] = edges_.emplace(make_key(u, v), sign);
        (void)it;
        if (!inserted)
            throw std::domain_error("add_edge: duplicate pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }

    bool has_edge(int u, int v) const {
        return u != v && edges_.count(make_key(u, v)) != 0;
    }

    std::optional<Sign> edge_sign(int u, int v) const {
        if (u == v) return std::nullopt;
        auto it = edges_.find(make_key(u, v));
        if (it == edges_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    static EdgeKey make_key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

    void require_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::domain_error("vertex index " + std::to_string(v) +
                                    " out of range for order " + std::to_string(order_));
    }

    int order_ = 0;
    EdgeMap edges_;
};

/// Raw integer sequence; validation happens in graphicality.
using SignedDegreeSequence = std::vector<int>;

/// Non-empty set of distinct integers to be realized as signed degrees.
class DegreeSet {
public:
    explicit DegreeSet(std::set<int> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::domain_error("DegreeSet: must be non-empty");
    }

    const std::set<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int min() const { return *values_.begin(); }
    int max() const { return *values_.rbegin(); }
    bool contains(int d) const { return values_.count(d) != 0; }

    bool all_positive() const { return min() >= 1; }
    bool all_negative() const { return max() <= -1; }

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    std::set<int> values_;
};

inline std::string to_string(const DegreeSet& d) {
    std::string out = "{";
    for (int v : d.values()) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    out += "}";
    return out;
}

/// Number of positive edges at v minus number of negative edges at v.
inline int signed_degree(const SignedGraph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::domain_error("signed_degree: vertex index " + std::to_string(v) +
                                " out of range for order " + std::to_string(g.order()));
    int d = 0;
    for (const auto& [key, sign] : g.edges())
        if (key.first == v || key.second == v) d += sign_value(sign);
    return d;
}

/// All vertex signed degrees, one per vertex, in vertex order.
inline std::vector<int> signed_degrees(const SignedGraph& g) {
    std::vector<int> deg(g.order(), 0);
    for (const auto& [key, sign] : g.edges()) {
        deg[key.first] += sign_value(sign);
        deg[key.second] += sign_value(sign);
    }
    return deg;
}

/// Vertex signed degrees listed in non-increasing order.
inline SignedDegreeSequence signed_degree_sequence(const SignedGraph& g) {
    std::vector<int> deg = signed_degrees(g);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

/// The set of distinct signed degrees occurring in g. Undefined on an empty
/// vertex set.
inline DegreeSet signed_degree_set(const SignedGraph& g) {
    if (g.order() == 0)
        throw std::domain_error("signed_degree_set: graph has no vertices");
    std::vector<int> deg = signed_degrees(g);
    return DegreeSet(std::set<int>(deg.begin(), deg.end()));
}

/// Same graph with every edge sign flipped; negates every signed degree.
inline SignedGraph negate_signs(const SignedGraph& g) {
    SignedGraph out(g.order());
    for (const auto& [key, sign] : g.edges())
        out.add_edge(key.first, key.second, opposite(sign));
    return out;
}

/// Connectivity of the underlying unsigned graph (signs ignored).
inline bool is_connected(const SignedGraph& g) {
    if (g.order() == 0)
        throw std::domain_error("is_connected: graph has no vertices");
    std::vector<std::vector<int>> adj(g.order());
    for (const auto& [key, sign] : g.edges()) {
        (void)sign;
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    std::vector<bool> seen(g.order(), false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                frontier.push(v);
            }
    }
    return reached == g.order();
}

/// Vertex-disjoint union: b's vertices are re-indexed by offset a.order().
inline SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
    SignedGraph out(a.order() + b.order());
    for (const auto& [key, sign] : a.edges()) out.add_edge(key.first, key.second, sign);
    const int offset = a.order();
    for (const auto& [key, sign] : b.edges())
        out.add_edge(key.first + offset, key.second + offset, sign);
    return out;
}

}  // namespace sgraph
