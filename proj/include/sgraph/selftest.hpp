#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgraph/dot_check.hpp"
#include "sgraph/graphicality.hpp"
#include "sgraph/io.hpp"
#include "sgraph/oracle.hpp"
#include "sgraph/realizer.hpp"
#include "sgraph/signed_graph.hpp"

namespace sgraph::selftest {

/// quick: reduced ranges for a fast smoke run. full: the complete
/// exhaustive ranges.
enum class Level { quick, full };

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

/// Seed for the randomized agreement sample; fixed so every run checks the
/// same sequences.
inline constexpr std::uint32_t random_agreement_seed = 1729;

namespace detail {

class Check {
public:
    void expect(bool condition, const std::function<std::string()>& describe) {
        ++checked_;
        if (!condition) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = describe();
        }
    }

    bool passed() const { return failures_ == 0; }
    long checked() const { return checked_; }
    long failures() const { return failures_; }
    const std::string& first_failure() const { return first_failure_; }

private:
    long checked_ = 0;
    long failures_ = 0;
    std::string first_failure_;
};

template <typename Fn>
void for_each_subset(int lo, int hi, Fn&& fn) {
    const int k = hi - lo + 1;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::set<int> values;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) values.insert(lo + i);
        fn(DegreeSet(std::move(values)));
    }
}

template <typename Fn>
void for_each_tuple(int length, int bound, Fn&& fn) {
    std::vector<int> tuple(length, -bound);
    for (;;) {
        fn(tuple);
        int pos = length - 1;
        while (pos >= 0 && tuple[pos] == bound) tuple[pos--] = -bound;
        if (pos < 0) return;
        ++tuple[pos];
    }
}

inline std::string show(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

enum class SetKind { single_sign, only_zero, single_sign_with_zero, mixed, mixed_with_zero };

inline SetKind classify(const DegreeSet& d) {
    bool pos = false, neg = false;
    for (int v : d.values()) {
        pos = pos || v > 0;
        neg = neg || v < 0;
    }
    const bool zero = d.contains(0);
    if (!pos && !neg) return SetKind::only_zero;
    if (pos != neg) return zero ? SetKind::single_sign_with_zero : SetKind::single_sign;
    return zero ? SetKind::mixed_with_zero : SetKind::mixed;
}

inline std::pair<DegreeSet, DegreeSet> split_signs(const DegreeSet& d) {
    std::set<int> positives, negatives;
    for (int v : d.values()) {
        if (v > 0) positives.insert(v);
        if (v < 0) negatives.insert(v);
    }
    return {DegreeSet(std::move(positives)), DegreeSet(std::move(negatives))};
}

inline std::vector<std::vector<int>> random_sequences(int count, int length, int bound,
                                                      std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<int> seq(length);
        // rng() % k instead of a distribution: identical sequences on every
        // platform.
        for (int& v : seq) v = static_cast<int>(rng() % (2 * bound + 1)) - bound;
        out.push_back(std::move(seq));
    }
    return out;
}

inline bool all_edges_have_sign(const SignedGraph& g, Sign sign) {
    for (const auto& [key, edge_sign] : g.edges()) {
        (void)key;
        if (edge_sign != sign) return false;
    }
    return true;
}

// --- criterion bodies -----------------------------------------------------

inline void positive_set_realization(Check& c, Level level) {
    const int hi = level == Level::full ? 6 : 4;
    for_each_subset(1, hi, [&](const DegreeSet& d) {
        const RealizationResult r = realize_positive_set(d);
        auto tag = [&] { return "set " + to_string(d); };
        c.expect(r.graph.order() == d.max() + 1, [&] { return tag() + ": wrong order"; });
        c.expect(is_connected(r.graph), [&] { return tag() + ": not connected"; });
        c.expect(all_edges_have_sign(r.graph, Sign::positive),
                 [&] { return tag() + ": negative edge present"; });
        c.expect(signed_degree_set(r.graph) == d, [&] { return tag() + ": wrong degree set"; });
        c.expect(r.claimed_minimum_order == r.graph.order(),
                 [&] { return tag() + ": wrong minimality claim"; });
    });
}

inline void positive_set_minimality(Check& c, Level level) {
    const int hi = level == Level::full ? 4 : 3;
    for_each_subset(1, hi, [&](const DegreeSet& d) {
        const int want = d.max() + 1;
        c.expect(oracle_min_order(d, true) == want,
                 [&] { return "set " + to_string(d) + ": connected minimum is not " +
                              std::to_string(want); });
        c.expect(oracle_min_order(d, false) == want,
                 [&] { return "set " + to_string(d) + ": unconstrained minimum is not " +
                              std::to_string(want); });
    });
}

inline void negative_set_mirror(Check& c, Level level) {
    const int lo = level == Level::full ? -6 : -4;
    for_each_subset(lo, -1, [&](const DegreeSet& d) {
        const RealizationResult r = realize_negative_set(d);
        auto tag = [&] { return "set " + to_string(d); };
        c.expect(r.graph.order() == -d.min() + 1, [&] { return tag() + ": wrong order"; });
        c.expect(is_connected(r.graph), [&] { return tag() + ": not connected"; });
        c.expect(signed_degree_set(r.graph) == d, [&] { return tag() + ": wrong degree set"; });
        c.expect(r.claimed_minimum_order == r.graph.order(),
                 [&] { return tag() + ": wrong minimality claim"; });
        std::set<int> mirrored;
        for (int v : d.values()) mirrored.insert(-v);
        c.expect(r.graph == negate_signs(realize_positive_set(DegreeSet(mirrored)).graph),
                 [&] { return tag() + ": not the sign-negated positive realization"; });
    });
}

inline void integer_set_realization(Check& c, Level level) {
    const int bound = level == Level::full ? 4 : 3;
    std::set<SetKind> seen;
    for_each_subset(-bound, bound, [&](const DegreeSet& d) {
        const RealizationResult r = realize_set(d);
        auto tag = [&] { return "set " + to_string(d); };
        c.expect(is_connected(r.graph), [&] { return tag() + ": not connected"; });
        c.expect(signed_degree_set(r.graph) == d, [&] { return tag() + ": wrong degree set"; });
        const SetKind kind = classify(d);
        seen.insert(kind);
        if (kind == SetKind::single_sign || kind == SetKind::only_zero)
            c.expect(r.claimed_minimum_order == r.graph.order(),
                     [&] { return tag() + ": minimality claim missing or wrong"; });
        else
            c.expect(!r.claimed_minimum_order.has_value(),
                     [&] { return tag() + ": unexpected minimality claim"; });
    });
    c.expect(seen.size() == 5, [] {
        return std::string("case dispatch did not exercise all five set shapes");
    });
}

inline void gluing_neutrality(Check& c, Level level) {
    const int bound = level == Level::full ? 4 : 3;
    for_each_subset(-bound, bound, [&](const DegreeSet& d) {
        const SetKind kind = classify(d);
        if (kind == SetKind::single_sign || kind == SetKind::only_zero) return;
        const SignedGraph whole = realize_set(d).graph;
        auto tag = [&] { return "set " + to_string(d); };

        auto expect_block_unchanged = [&](const SignedGraph& part, int offset) {
            for (int v = 0; v < part.order(); ++v)
                c.expect(signed_degree(whole, offset + v) == signed_degree(part, v), [&] {
                    return tag() + ": ingredient vertex " + std::to_string(offset + v) +
                           " changed degree";
                });
        };

        if (kind == SetKind::single_sign_with_zero) {
            std::set<int> rest_values = d.values();
            rest_values.erase(0);
            const DegreeSet rest(std::move(rest_values));
            const SignedGraph base = rest.all_positive() ? realize_positive_set(rest).graph
                                                         : realize_negative_set(rest).graph;
            c.expect(whole.order() == base.order() + 2,
                     [&] { return tag() + ": expected exactly two new vertices"; });
            expect_block_unchanged(base, 0);
            for (int v = base.order(); v < whole.order(); ++v)
                c.expect(signed_degree(whole, v) == 0, [&] {
                    return tag() + ": new vertex " + std::to_string(v) + " not at zero";
                });
            return;
        }

        const auto [positives, negatives] = split_signs(d);
        const SignedGraph g1 = realize_positive_set(positives).graph;
        const SignedGraph g2 = realize_negative_set(negatives).graph;
        const int expected_order =
            g1.order() + g2.order() + (kind == SetKind::mixed_with_zero ? 1 : 0);
        c.expect(whole.order() == expected_order,
                 [&] { return tag() + ": unexpected glued order"; });
        expect_block_unchanged(g1, 0);
        expect_block_unchanged(g2, g1.order());
        if (kind == SetKind::mixed_with_zero)
            c.expect(signed_degree(whole, whole.order() - 1) == 0,
                     [&] { return tag() + ": new vertex not at zero"; });
    });
}

inline void replication(Check& c, Level level) {
    const int hi = level == Level::full ? 4 : 3;
    const int max_copies = level == Level::full ? 4 : 2;
    for_each_subset(1, hi, [&](const DegreeSet& d) {
        const SignedGraph g = realize_positive_set(d).graph;
        for (int k = 1; k <= max_copies; ++k) {
            const SignedGraph h = replicate(g, k);
            c.expect(h.order() == k * g.order(), [&] {
                return "set " + to_string(d) + ", k=" + std::to_string(k) + ": wrong order";
            });
            c.expect(signed_degree_set(h) == d, [&] {
                return "set " + to_string(d) + ", k=" + std::to_string(k) +
                       ": degree set changed";
            });
        }
    });
}

struct AgreementRanges {
    int exhaustive_length;
    int exhaustive_bound;
    int random_count;
    int random_length;
    int random_bound;
};

inline AgreementRanges agreement_ranges(Level level) {
    if (level == Level::full) return {4, 3, 500, 5, 4};
    return {3, 2, 50, 4, 3};
}

inline void decider_oracle_agreement(Check& c, Level level) {
    const AgreementRanges ranges = agreement_ranges(level);
    auto agree = [&](const std::vector<int>& seq) {
        const bool chartrand = is_graphical_chartrand(seq);
        const bool yan = is_graphical_yan(seq);
        const bool oracle = oracle_is_graphical(seq);
        c.expect(chartrand == oracle && yan == oracle, [&] {
            std::ostringstream msg;
            msg << "seq " << show(seq) << ": chartrand=" << chartrand << " yan=" << yan
                << " oracle=" << oracle;
            return msg.str();
        });
    };
    for_each_tuple(ranges.exhaustive_length, ranges.exhaustive_bound, agree);
    for (const std::vector<int>& seq :
         random_sequences(ranges.random_count, ranges.random_length, ranges.random_bound,
                          random_agreement_seed))
        agree(seq);
}

inline void witness_soundness(Check& c, Level level) {
    const AgreementRanges ranges = agreement_ranges(level);
    auto sound = [&](const std::vector<int>& seq) {
        const bool graphical = is_graphical_chartrand(seq);
        const std::optional<SignedGraph> witness = realize_sequence(seq);
        c.expect(witness.has_value() == graphical, [&] {
            return "seq " + show(seq) + ": witness presence disagrees with decision";
        });
        if (witness) {
            std::vector<int> want = seq;
            std::sort(want.begin(), want.end(), std::greater<>());
            c.expect(signed_degree_sequence(*witness) == want,
                     [&] { return "seq " + show(seq) + ": witness has wrong degrees"; });
        }
    };
    for_each_tuple(ranges.exhaustive_length, ranges.exhaustive_bound, sound);
    for (const std::vector<int>& seq :
         random_sequences(ranges.random_count, ranges.random_length, ranges.random_bound,
                          random_agreement_seed))
        sound(seq);
}

inline void decider_symmetries(Check& c, Level level) {
    const AgreementRanges ranges = agreement_ranges(level);
    // Every reordering and every negation of a tuple lies in the same
    // exhaustive range, so verdicts grouped by sorted tuple must be constant
    // (permutation invariance) and stable under negation.
    std::map<std::vector<int>, std::pair<bool, bool>> by_multiset;
    for_each_tuple(ranges.exhaustive_length, ranges.exhaustive_bound,
                   [&](const std::vector<int>& seq) {
                       const std::pair<bool, bool> verdicts{is_graphical_chartrand(seq),
                                                            is_graphical_yan(seq)};
                       std::vector<int> key = seq;
                       std::sort(key.begin(), key.end(), std::greater<>());
                       auto [it, inserted] = by_multiset.emplace(key, verdicts);
                       if (!inserted)
                           c.expect(it->second == verdicts, [&] {
                               return "seq " + show(seq) + ": verdict depends on order";
                           });
                   });
    for (const auto& [key, verdicts] : by_multiset) {
        std::vector<int> negated(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) negated[i] = -key[i];
        std::sort(negated.begin(), negated.end(), std::greater<>());
        c.expect(by_multiset.at(negated) == verdicts,
                 [&] { return "seq " + show(key) + ": verdict changes under negation"; });
    }
}

inline void serialization_roundtrip(Check& c, Level level) {
    std::vector<SignedGraph> graphs;
    const int positive_hi = level == Level::full ? 6 : 4;
    for_each_subset(1, positive_hi,
                    [&](const DegreeSet& d) { graphs.push_back(realize_positive_set(d).graph); });
    for_each_subset(level == Level::full ? -6 : -4, -1,
                    [&](const DegreeSet& d) { graphs.push_back(realize_negative_set(d).graph); });
    const int bound = level == Level::full ? 4 : 3;
    for_each_subset(-bound, bound,
                    [&](const DegreeSet& d) { graphs.push_back(realize_set(d).graph); });
    for_each_subset(1, level == Level::full ? 4 : 3, [&](const DegreeSet& d) {
        const SignedGraph g = realize_positive_set(d).graph;
        for (int k = 1; k <= (level == Level::full ? 4 : 2); ++k)
            graphs.push_back(replicate(g, k));
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const SignedGraph& g = graphs[i];
        auto tag = [&] { return "graph #" + std::to_string(i); };
        const std::string text = to_json(g);
        c.expect(to_json(g) == text, [&] { return tag() + ": serialization not canonical"; });
        SignedGraph back = from_json(text);
        c.expect(back == g, [&] { return tag() + ": JSON round trip changed the graph"; });
        c.expect(to_json(back) == text,
                 [&] { return tag() + ": reserialization changed bytes"; });
        c.expect(is_valid_dot(to_dot(g)), [&] { return tag() + ": DOT output rejected"; });
    }
}

}  // namespace detail

/// Runs one named criterion body and wraps its outcome.
inline CriterionResult run_criterion(const std::string& id, const std::string& name,
                                     Level level,
                                     const std::function<void(detail::Check&, Level)>& body) {
    detail::Check check;
    const auto start = std::chrono::steady_clock::now();
    body(check, level);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    CriterionResult result{id, name, check.passed(), "", elapsed.count()};
    if (check.passed())
        result.detail = std::to_string(check.checked()) + " checks";
    else
        result.detail = check.first_failure() + " (" + std::to_string(check.failures()) + " of " +
                        std::to_string(check.checked()) + " checks failed)";
    return result;
}

/// Runs the whole acceptance suite, printing one pass/fail line per
/// criterion to `log` when given.
inline std::vector<CriterionResult> run_acceptance_suite(Level level,
                                                         std::ostream* log = nullptr) {
    using Body = std::function<void(detail::Check&, Level)>;
    const std::vector<std::pair<std::string, Body>> criteria = {
        {"positive-set-realization", detail::positive_set_realization},
        {"positive-set-minimality", detail::positive_set_minimality},
        {"negative-set-mirror", detail::negative_set_mirror},
        {"integer-set-realization", detail::integer_set_realization},
        {"gluing-neutrality", detail::gluing_neutrality},
        {"replication", detail::replication},
        {"decider-oracle-agreement", detail::decider_oracle_agreement},
        {"witness-soundness", detail::witness_soundness},
        {"decider-symmetries", detail::decider_symmetries},
        {"serialization-roundtrip", detail::serialization_roundtrip},
    };

    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r =
            run_criterion(std::to_string(i + 1), criteria[i].first, level, criteria[i].second);
        if (log) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(2);
            line << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                 << r.detail << ", " << r.seconds << "s)";
            *log << line.str() << std::endl;
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace sgraph::selftest
