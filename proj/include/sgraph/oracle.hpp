#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// Caps on exhaustive enumeration. Enumerating order n visits
/// 3^(n(n-1)/2) labeled signed graphs, so callers must keep n small;
/// anything over the cap is refused rather than attempted.
struct EnumerationBudget {
    int max_order = 6;
    std::optional<std::uint64_t> max_graphs{};
};

/// A query was refused because it exceeds the enumeration budget. Not a
/// claim about the answer.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest order whose base-3 index space fits in 64 bits (3^36 states).
inline constexpr int max_enumerable_order = 9;

/// 3^(n(n-1)/2), the number of labeled signed graphs on n vertices.
inline std::uint64_t signed_graph_count(int n) {
    if (n < 0) throw std::domain_error("signed_graph_count: negative order");
    if (n > max_enumerable_order)
        throw std::domain_error("signed_graph_count: order " + std::to_string(n) +
                                " exceeds the 64-bit index space (max " +
                                std::to_string(max_enumerable_order) + ")");
    const int pairs = n * (n - 1) / 2;
    std::uint64_t count = 1;
    for (int i = 0; i < pairs; ++i) count *= 3;
    return count;
}

namespace detail {

inline void require_within_budget(int n, const EnumerationBudget& budget) {
    if (n < 0) throw std::domain_error("enumeration order must be non-negative");
    if (n > budget.max_order)
        throw BudgetError("order " + std::to_string(n) + " exceeds budget max_order " +
                          std::to_string(budget.max_order));
    if (n > max_enumerable_order)
        throw BudgetError("order " + std::to_string(n) + " exceeds the enumerable cap " +
                          std::to_string(max_enumerable_order));
    if (budget.max_graphs && signed_graph_count(n) > *budget.max_graphs)
        throw BudgetError("enumerating order " + std::to_string(n) + " needs " +
                          std::to_string(signed_graph_count(n)) + " states, over max_graphs " +
                          std::to_string(*budget.max_graphs));
}

// Base-3 edge-state encoding: pair k in lexicographic order ((0,1), (0,2),
// ..., (0,n-1), (1,2), ...) is digit k of the index, least significant
// first; digit 0 = absent, 1 = positive, 2 = negative.

inline void degrees_from_index(int n, std::uint64_t index, int* deg) {
    for (int i = 0; i < n; ++i) deg[i] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (index % 3) {
                case 1:
                    ++deg[u];
                    ++deg[v];
                    break;
                case 2:
                    --deg[u];
                    --deg[v];
                    break;
                default:
                    break;
            }
            index /= 3;
        }
}

inline bool connected_from_index(int n, std::uint64_t index) {
    std::array<int, max_enumerable_order> parent{};
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto root = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (index % 3 != 0) {
                int ru = root(u), rv = root(v);
                if (ru != rv) {
                    parent[ru] = rv;
                    --components;
                }
            }
            index /= 3;
        }
    return components == 1;
}

inline constexpr std::uint64_t no_witness = std::numeric_limits<std::uint64_t>::max();

/// Scans [0, count) for an index satisfying pred. Large ranges are split
/// into contiguous chunks handled by worker threads that share only a stop
/// flag and a first-writer-wins result cell; the predicate must be pure, so
/// the boolean outcome is deterministic either way.
template <typename Pred>
std::optional<std::uint64_t> find_witness_index(std::uint64_t count, Pred&& pred,
                                                std::uint64_t parallel_threshold = 1u << 18) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (count < parallel_threshold || workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }

    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> cell{no_witness};
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(count, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i) {
                if ((i - begin) % 4096 == 0 && stop.load(std::memory_order_relaxed)) return;
                if (pred(i)) {
                    std::uint64_t expected = no_witness;
                    cell.compare_exchange_strong(expected, i);
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (std::thread& t : threads) t.join();
    const std::uint64_t found = cell.load();
    if (found == no_witness) return std::nullopt;
    return found;
}

}  // namespace detail

/// Decodes a base-3 edge-state index into the corresponding graph.
inline SignedGraph signed_graph_from_index(int n, std::uint64_t index) {
    if (index >= signed_graph_count(n))
        throw std::domain_error("signed_graph_from_index: index out of range");
    SignedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (index % 3) {
                case 1:
                    g.add_edge(u, v, Sign::positive);
                    break;
                case 2:
                    g.add_edge(u, v, Sign::negative);
                    break;
                default:
                    break;
            }
            index /= 3;
        }
    return g;
}

/// Range over every labeled signed graph on n vertices, one per base-3
/// edge-state index, in index order.
class SignedGraphEnumeration {
public:
    class iterator {
    public:
        using value_type = SignedGraph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t index) : n_(n), index_(index) {}

        SignedGraph operator*() const { return signed_graph_from_index(n_, index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++index_;
            return old;
        }
        std::uint64_t index() const { return index_; }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        int n_ = 0;
        std::uint64_t index_ = 0;
    };

    SignedGraphEnumeration(int n, const EnumerationBudget& budget) : n_(n) {
        detail::require_within_budget(n, budget);
        count_ = signed_graph_count(n);
    }

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count_}; }
    std::uint64_t size() const { return count_; }

private:
    int n_ = 0;
    std::uint64_t count_ = 0;
};

/// Every labeled signed graph on n vertices exactly once; refuses orders
/// over budget.
inline SignedGraphEnumeration enumerate_signed_graphs(int n,
                                                      const EnumerationBudget& budget = {}) {
    return {n, budget};
}

/// Index of some graph on |seq| vertices whose signed degree multiset
/// equals seq, or nothing after exhausting the space.
inline std::optional<std::uint64_t> oracle_graphical_witness(
    const SignedDegreeSequence& seq, const EnumerationBudget& budget = {}) {
    const int n = static_cast<int>(seq.size());
    detail::require_within_budget(n, budget);
    std::vector<int> target = seq;
    std::sort(target.begin(), target.end());
    return detail::find_witness_index(signed_graph_count(n), [&, n](std::uint64_t index) {
        int deg[max_enumerable_order];
        detail::degrees_from_index(n, index, deg);
        std::sort(deg, deg + n);
        for (int i = 0; i < n; ++i)
            if (deg[i] != target[i]) return false;
        return true;
    });
}

/// True iff some labeled signed graph on |seq| vertices has signed degree
/// multiset equal to seq. Ground truth by exhaustion.
inline bool oracle_is_graphical(const SignedDegreeSequence& seq,
                                const EnumerationBudget& budget = {}) {
    return oracle_graphical_witness(seq, budget).has_value();
}

/// Index of some graph on n vertices (connected when required) whose
/// distinct signed degrees are exactly D, or nothing.
inline std::optional<std::uint64_t> oracle_realization_witness(
    const DegreeSet& degree_set, int n, bool require_connected,
    const EnumerationBudget& budget = {}) {
    detail::require_within_budget(n, budget);
    const std::vector<int> target(degree_set.values().begin(), degree_set.values().end());
    return detail::find_witness_index(signed_graph_count(n), [&, n](std::uint64_t index) {
        int deg[max_enumerable_order];
        detail::degrees_from_index(n, index, deg);
        std::sort(deg, deg + n);
        int distinct = 0;
        for (int i = 0; i < n; ++i)
            if (i == 0 || deg[i] != deg[i - 1]) {
                if (distinct == static_cast<int>(target.size()) || deg[i] != target[distinct])
                    return false;
                ++distinct;
            }
        if (distinct != static_cast<int>(target.size())) return false;
        return !require_connected || detail::connected_from_index(n, index);
    });
}

inline bool oracle_realizable_at_order(const DegreeSet& degree_set, int n,
                                       bool require_connected,
                                       const EnumerationBudget& budget = {}) {
    return oracle_realization_witness(degree_set, n, require_connected, budget).has_value();
}

/// Smallest order (>= 1) at which D is realizable, scanning upward within
/// the budget. Exhausting the budget raises BudgetError; that is a refusal,
/// not a non-existence claim.
inline int oracle_min_order(const DegreeSet& degree_set, bool require_connected,
                            const EnumerationBudget& budget = {}) {
    for (int n = 1; n <= budget.max_order; ++n)
        if (oracle_realizable_at_order(degree_set, n, require_connected, budget)) return n;
    throw BudgetError("no realization of " + to_string(degree_set) + " within max_order " +
                      std::to_string(budget.max_order));
}

}  // namespace sgraph
