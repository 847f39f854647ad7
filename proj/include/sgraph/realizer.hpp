#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// A connected signed graph realizing a requested degree set.
/// claimed_minimum_order is present only when the construction is known to
/// be order-minimal (single-sign sets and {0}); it then equals
/// graph.order().
struct RealizationResult {
    SignedGraph graph;
    std::optional<int> claimed_minimum_order{};
};

namespace detail {

inline void add_complete_positive_block(SignedGraph& g, int begin, int count) {
    for (int u = begin; u < begin + count; ++u)
        for (int v = u + 1; v < begin + count; ++v) g.add_edge(u, v, Sign::positive);
}

inline void add_positive_join(SignedGraph& g, int a_begin, int a_count, int b_begin,
                              int b_count) {
    for (int u = a_begin; u < a_begin + a_count; ++u)
        for (int v = b_begin; v < b_begin + b_count; ++v) g.add_edge(u, v, Sign::positive);
}

// Ascending distinct positive values. Consumes the two extremes per step:
// the smallest becomes a complete block joined to everything, the largest
// sets the order via a trailing edge-free block; sets of size 1 and 2 are
// the bases. Vertex layout: recursive part first, then the complete block,
// then the edge-free block.
inline SignedGraph realize_positive_values(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n == 1) {
        SignedGraph g(d[0] + 1);
        add_complete_positive_block(g, 0, d[0] + 1);
        return g;
    }
    if (n == 2) {
        SignedGraph g(d[1] + 1);
        add_complete_positive_block(g, 0, d[0]);
        add_positive_join(g, 0, d[0], d[0], d[1] - d[0] + 1);
        return g;
    }
    std::vector<int> inner(n - 2);
    for (int i = 1; i <= n - 2; ++i) inner[i - 1] = d[i] - d[0];
    SignedGraph core = realize_positive_values(inner);

    const int core_count = core.order();  // d[n-2] - d[0] + 1
    const int clique_count = d[0];
    const int tail_count = d[n - 1] - d[n - 2];
    SignedGraph g(core_count + clique_count + tail_count);
    for (const auto& [key, sign] : core.edges()) g.add_edge(key.first, key.second, sign);
    add_complete_positive_block(g, core_count, clique_count);
    add_positive_join(g, core_count, clique_count, 0, core_count);
    add_positive_join(g, core_count, clique_count, core_count + clique_count, tail_count);
    return g;
}

/// Lexicographically smallest edge of the requested sign.
inline SignedGraph::EdgeKey first_edge_with_sign(const SignedGraph& g, Sign sign) {
    for (const auto& [key, edge_sign] : g.edges())
        if (edge_sign == sign) return key;
    throw std::logic_error("realize_set: ingredient graph has no edge of the needed sign");
}

}  // namespace detail

/// Connected all-positive graph of order max(D)+1 whose distinct signed
/// degrees are exactly D; that order is the minimum possible.
inline RealizationResult realize_positive_set(const DegreeSet& degree_set) {
    if (!degree_set.all_positive())
        throw std::domain_error("realize_positive_set: every element must be >= 1");
    const std::vector<int> values(degree_set.values().begin(), degree_set.values().end());
    SignedGraph g = detail::realize_positive_values(values);
    return {std::move(g), degree_set.max() + 1};
}

/// Mirror of realize_positive_set under sign interchange: connected graph
/// of order |min(D)|+1 realizing an all-negative D at minimum order.
inline RealizationResult realize_negative_set(const DegreeSet& degree_set) {
    if (!degree_set.all_negative())
        throw std::domain_error("realize_negative_set: every element must be <= -1");
    std::set<int> mirrored;
    for (int d : degree_set.values()) mirrored.insert(-d);
    RealizationResult positive = realize_positive_set(DegreeSet(std::move(mirrored)));
    return {negate_signs(positive.graph), -degree_set.min() + 1};
}

namespace detail {

// The four cross edges cancel at every endpoint: each touched vertex gains
// one positive and one negative edge, and each new vertex lands on signed
// degree zero.

// D = D1 u {0}, D1 single-signed. Layout: realization of D1, then x, then y.
inline SignedGraph glue_zero_onto_single_signed(const DegreeSet& d1) {
    const bool positive = d1.all_positive();
    SignedGraph base =
        positive ? realize_positive_set(d1).graph : realize_negative_set(d1).graph;
    const Sign main_sign = positive ? Sign::positive : Sign::negative;
    const auto [u, v] = first_edge_with_sign(base, main_sign);
    const int x = base.order();
    const int y = base.order() + 1;
    SignedGraph g(base.order() + 2);
    for (const auto& [key, sign] : base.edges()) g.add_edge(key.first, key.second, sign);
    g.add_edge(u, x, main_sign);
    g.add_edge(v, y, main_sign);
    g.add_edge(u, y, opposite(main_sign));
    g.add_edge(v, x, opposite(main_sign));
    return g;
}

// D = D1 u D2 with D1 positive, D2 negative. Layout: realization of D1,
// then realization of D2.
inline SignedGraph glue_mixed(const DegreeSet& d1, const DegreeSet& d2) {
    SignedGraph pos = realize_positive_set(d1).graph;
    SignedGraph neg = realize_negative_set(d2).graph;
    const auto [u, v] = first_edge_with_sign(pos, Sign::positive);
    auto [x, y] = first_edge_with_sign(neg, Sign::negative);
    const int offset = pos.order();
    x += offset;
    y += offset;
    SignedGraph g = disjoint_union(pos, neg);
    g.add_edge(u, x, Sign::positive);
    g.add_edge(v, y, Sign::positive);
    g.add_edge(u, y, Sign::negative);
    g.add_edge(v, x, Sign::negative);
    return g;
}

// D = D1 u D2 u {0}. Layout: realization of D1, realization of D2, then the
// one new vertex y; x is the smallest-index vertex of the D2 block.
inline SignedGraph glue_mixed_with_zero(const DegreeSet& d1, const DegreeSet& d2) {
    SignedGraph pos = realize_positive_set(d1).graph;
    SignedGraph neg = realize_negative_set(d2).graph;
    const auto [u, v] = first_edge_with_sign(pos, Sign::positive);
    const int x = pos.order();
    const int y = pos.order() + neg.order();
    SignedGraph g(pos.order() + neg.order() + 1);
    for (const auto& [key, sign] : pos.edges()) g.add_edge(key.first, key.second, sign);
    for (const auto& [key, sign] : neg.edges())
        g.add_edge(key.first + pos.order(), key.second + pos.order(), sign);
    g.add_edge(u, y, Sign::positive);
    g.add_edge(v, x, Sign::positive);
    g.add_edge(u, x, Sign::negative);
    g.add_edge(v, y, Sign::negative);
    return g;
}

}  // namespace detail

/// Connected signed graph whose distinct signed degrees are exactly D, for
/// any non-empty integer set. Single-signed sets and {0} come out at
/// minimum order; mixed sets go through edge-gluing constructions whose
/// order is not claimed minimal.
inline RealizationResult realize_set(const DegreeSet& degree_set) {
    if (degree_set.size() == 1 && degree_set.contains(0)) return {SignedGraph(1), 1};
    if (degree_set.all_positive()) return realize_positive_set(degree_set);
    if (degree_set.all_negative()) return realize_negative_set(degree_set);

    std::set<int> positives, negatives;
    for (int d : degree_set.values()) {
        if (d > 0) positives.insert(d);
        if (d < 0) negatives.insert(d);
    }
    const bool has_zero = degree_set.contains(0);
    if (has_zero && negatives.empty())
        return {detail::glue_zero_onto_single_signed(DegreeSet(std::move(positives))), {}};
    if (has_zero && positives.empty())
        return {detail::glue_zero_onto_single_signed(DegreeSet(std::move(negatives))), {}};
    if (has_zero)
        return {detail::glue_mixed_with_zero(DegreeSet(std::move(positives)),
                                             DegreeSet(std::move(negatives))),
                {}};
    return {detail::glue_mixed(DegreeSet(std::move(positives)),
                               DegreeSet(std::move(negatives))),
            {}};
}

/// Disjoint union of k copies of g; the signed degree set is unchanged and
/// the result is disconnected for k >= 2.
inline SignedGraph replicate(const SignedGraph& g, int k) {
    if (k < 1) throw std::domain_error("replicate: k must be >= 1");
    if (g.order() < 1) throw std::domain_error("replicate: graph must have vertices");
    SignedGraph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

}  // namespace sgraph
