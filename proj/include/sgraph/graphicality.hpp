#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sgraph/signed_graph.hpp"

namespace sgraph {

/// A standard sequence: non-increasing, even entry sum, d1 > 0, every
/// |di| < n, and |d1| >= |dn|. Construction validates all five conditions.
class StandardSequence {
public:
    explicit StandardSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        const int n = static_cast<int>(entries_.size());
        if (n == 0) throw std::domain_error("StandardSequence: empty");
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && entries_[i - 1] < entries_[i])
                throw std::domain_error("StandardSequence: not non-increasing");
            if (std::abs(entries_[i]) >= n)
                throw std::domain_error("StandardSequence: |entry| must be < length");
            sum += entries_[i];
        }
        if (entries_.front() <= 0)
            throw std::domain_error("StandardSequence: first entry must be positive");
        if (std::abs(entries_.front()) < std::abs(entries_.back()))
            throw std::domain_error("StandardSequence: |d1| < |dn|");
        if (sum % 2 != 0)
            throw std::domain_error("StandardSequence: odd entry sum");
    }

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }

    /// d1, the largest entry; positive by construction.
    int head() const { return entries_.front(); }

    /// Largest admissible number of negative attachments in a head
    /// reduction: floor((n - 1 - d1) / 2). With s in 0..max_split() and
    /// r = d1 + s, the decremented and incremented blocks stay disjoint.
    int max_split() const { return (length() - 1 - head()) / 2; }

    friend bool operator==(const StandardSequence&, const StandardSequence&) = default;

private:
    std::vector<int> entries_;
};

/// Input was empty or all zeros (graphical: realized edge-free).
struct AllZero {
    int length = 0;
    friend bool operator==(const AllZero&, const AllZero&) = default;
};

/// Input normalized to a standard sequence; `negated` records whether every
/// entry was sign-flipped along the way.
struct Standard {
    StandardSequence sequence;
    bool negated = false;
};

enum class RejectReason { odd_sum, magnitude_bound, empty_after_rules };

/// Input provably fails a necessary condition for graphicality.
struct Rejected {
    RejectReason reason = RejectReason::odd_sum;
};

using StandardizationOutcome = std::variant<AllZero, Standard, Rejected>;

/// Normalizes an arbitrary integer sequence. Empty or all-zero input is
/// AllZero. Otherwise: sort non-increasingly; if d1 <= 0 or |d1| < |dn|,
/// negate everything and re-sort (sound because flipping all edge signs of
/// any realization negates every signed degree); then reject on odd entry
/// sum or on any |di| >= n. What remains is standard.
inline StandardizationOutcome standardize(const SignedDegreeSequence& seq) {
    bool all_zero = true;
    for (int d : seq)
        if (d != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) return AllZero{static_cast<int>(seq.size())};

    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    bool negated = false;
    if (sorted.front() <= 0 || std::abs(sorted.front()) < std::abs(sorted.back())) {
        negated = true;
        for (int& d : sorted) d = -d;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
    }

    const long long sum = std::accumulate(sorted.begin(), sorted.end(), 0LL);
    if (sum % 2 != 0) return Rejected{RejectReason::odd_sum};
    const int n = static_cast<int>(sorted.size());
    for (int d : sorted)
        if (std::abs(d) >= n) return Rejected{RejectReason::magnitude_bound};

    return Standard{StandardSequence(std::move(sorted)), negated};
}

/// Head reduction: delete d1, subtract 1 from the next r entries, add 1 to
/// the last s entries. Requires r - s = d1 and 0 <= s <= max_split(), which
/// keeps the two adjusted blocks disjoint. Returns the length-(n-1)
/// sequence in the reduced order (position i holds what was sorted
/// position i+1).
inline SignedDegreeSequence reduce_chartrand(const StandardSequence& seq, int r, int s) {
    const int n = seq.length();
    const int d1 = seq.head();
    if (r - s != d1)
        throw std::domain_error("reduce_chartrand: r - s must equal d1");
    if (s < 0 || s > seq.max_split())
        throw std::domain_error("reduce_chartrand: s out of range 0.." +
                                std::to_string(seq.max_split()));
    const std::vector<int>& d = seq.entries();
    std::vector<int> out(d.begin() + 1, d.end());
    for (int i = 0; i < r; ++i) --out[i];
    for (int i = n - 1 - s; i < n - 1; ++i) ++out[i];
    return out;
}

namespace detail {

using GraphicalityMemo = std::map<std::vector<int>, bool>;

inline bool graphical_chartrand_rec(const SignedDegreeSequence& raw, GraphicalityMemo& memo) {
    StandardizationOutcome outcome = standardize(raw);
    if (std::holds_alternative<AllZero>(outcome)) return true;
    if (std::holds_alternative<Rejected>(outcome)) return false;

    const StandardSequence& st = std::get<Standard>(outcome).sequence;
    auto it = memo.find(st.entries());
    if (it != memo.end()) return it->second;

    bool graphical = false;
    for (int s = 0; s <= st.max_split() && !graphical; ++s)
        graphical = graphical_chartrand_rec(reduce_chartrand(st, st.head() + s, s), memo);
    memo.emplace(st.entries(), graphical);
    return graphical;
}

/// permutation[i] = index in v of the element placed at sorted rank i
/// (non-increasing, stable).
inline std::vector<int> sort_permutation(const std::vector<int>& v) {
    std::vector<int> perm(v.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return v[a] > v[b]; });
    return perm;
}

}  // namespace detail

/// Decides graphicality by exhaustive search over the admissible (r, s)
/// pairs at every level, memoized on the standardized sequence.
inline bool is_graphical_chartrand(const SignedDegreeSequence& seq) {
    detail::GraphicalityMemo memo;
    return detail::graphical_chartrand_rec(seq, memo);
}

/// Largest m in 0..max_split() such that m = 0 or d_{d1+m+1} > d_{n-m+1}
/// (1-based). m = 0 is always admissible; the paper-style condition indexes
/// past the end there, so the strict inequality is required only for m >= 1,
/// where the max_split() cap already keeps both indices in range.
inline int compute_m(const StandardSequence& seq) {
    const std::vector<int>& d = seq.entries();
    const int n = seq.length();
    const int d1 = seq.head();
    for (int m = seq.max_split(); m >= 1; --m)
        if (d[d1 + m] > d[n - m]) return m;
    return 0;
}

/// Decides graphicality by one deterministic reduction per level: the
/// (r, s) = (d1 + m, m) reduction with m = compute_m. No search.
inline bool is_graphical_yan(const SignedDegreeSequence& seq) {
    SignedDegreeSequence raw = seq;
    for (;;) {
        StandardizationOutcome outcome = standardize(raw);
        if (std::holds_alternative<AllZero>(outcome)) return true;
        if (std::holds_alternative<Rejected>(outcome)) return false;
        const StandardSequence& st = std::get<Standard>(outcome).sequence;
        const int m = compute_m(st);
        raw = reduce_chartrand(st, st.head() + m, m);
    }
}

/// Entrywise negation of the working sequence.
struct NegateStep {
    friend bool operator==(const NegateStep&, const NegateStep&) = default;
};

/// One head reduction: `permutation` sorts the working sequence
/// non-increasingly (permutation[i] = pre-sort position of sorted rank i),
/// then the (r, s) reduction of reduce_chartrand applies.
struct ReduceStep {
    int r = 0;
    int s = 0;
    std::vector<int> permutation;
    friend bool operator==(const ReduceStep&, const ReduceStep&) = default;
};

using TraceStep = std::variant<NegateStep, ReduceStep>;

/// Record of a successful reduction run: replaying `steps` forward on the
/// original sequence ends in the all-zero sequence of length `terminal`.
struct ReductionTrace {
    std::vector<TraceStep> steps;
    int terminal = 0;
};

/// Runs the Chartrand search and records the first successful reduction
/// path. Returns nothing when the sequence is not graphical.
inline std::optional<ReductionTrace> chartrand_reduction_trace(const SignedDegreeSequence& seq) {
    detail::GraphicalityMemo memo;
    ReductionTrace trace;
    SignedDegreeSequence raw = seq;
    for (;;) {
        StandardizationOutcome outcome = standardize(raw);
        if (const AllZero* z = std::get_if<AllZero>(&outcome)) {
            trace.terminal = z->length;
            return trace;
        }
        if (std::holds_alternative<Rejected>(outcome)) return std::nullopt;

        const Standard& st = std::get<Standard>(outcome);
        if (st.negated) {
            trace.steps.emplace_back(NegateStep{});
            for (int& d : raw) d = -d;
        }
        std::vector<int> perm = detail::sort_permutation(raw);

        bool advanced = false;
        for (int s = 0; s <= st.sequence.max_split(); ++s) {
            SignedDegreeSequence reduced =
                reduce_chartrand(st.sequence, st.sequence.head() + s, s);
            if (detail::graphical_chartrand_rec(reduced, memo)) {
                trace.steps.emplace_back(
                    ReduceStep{st.sequence.head() + s, s, std::move(perm)});
                raw = std::move(reduced);
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
}

/// Applies trace steps forward to a raw sequence; used to check the trace
/// invariant (the result of a recorded trace is all zeros).
inline SignedDegreeSequence replay_trace(SignedDegreeSequence raw, const ReductionTrace& trace) {
    for (const TraceStep& step : trace.steps) {
        if (std::holds_alternative<NegateStep>(step)) {
            for (int& d : raw) d = -d;
            continue;
        }
        const ReduceStep& red = std::get<ReduceStep>(step);
        const int n = static_cast<int>(raw.size());
        if (static_cast<int>(red.permutation.size()) != n)
            throw std::domain_error("replay_trace: permutation length mismatch");
        std::vector<int> sorted(n);
        for (int i = 0; i < n; ++i) sorted[i] = raw[red.permutation[i]];
        std::vector<int> next(sorted.begin() + 1, sorted.end());
        for (int i = 0; i < red.r; ++i) --next[i];
        for (int i = n - 1 - red.s; i < n - 1; ++i) ++next[i];
        raw = std::move(next);
    }
    return raw;
}

/// Builds a signed graph whose sorted signed degree sequence equals the
/// sorted input, or nothing when the input is not graphical. The recorded
/// trace is unwound bottom-up: the terminal all-zero sequence is an
/// edge-free graph; each reduction step adds one vertex with positive edges
/// to the decremented positions and negative edges to the incremented ones;
/// each negate step flips every accumulated sign.
inline std::optional<SignedGraph> realize_sequence(const SignedDegreeSequence& seq) {
    std::optional<ReductionTrace> trace = chartrand_reduction_trace(seq);
    if (!trace) return std::nullopt;

    struct PendingEdge {
        int u, v;
        Sign sign;
    };
    std::vector<PendingEdge> acc;
    // verts[i] = vertex currently realizing position i of the working
    // sequence at this unwinding depth.
    std::vector<int> verts(trace->terminal);
    std::iota(verts.begin(), verts.end(), 0);
    int next_vertex = trace->terminal;

    for (auto it = trace->steps.rbegin(); it != trace->steps.rend(); ++it) {
        if (std::holds_alternative<NegateStep>(*it)) {
            for (PendingEdge& e : acc) e.sign = opposite(e.sign);
            continue;
        }
        const ReduceStep& red = std::get<ReduceStep>(*it);
        const int n = static_cast<int>(red.permutation.size());
        const int w = next_vertex++;
        // Sorted rank k (0-based, k >= 1) of the pre-reduction sequence is
        // position k-1 of the reduced one, hence vertex verts[k-1].
        for (int k = 1; k <= red.r; ++k)
            acc.push_back({w, verts[k - 1], Sign::positive});
        for (int k = n - red.s; k <= n - 1; ++k)
            acc.push_back({w, verts[k - 1], Sign::negative});
        std::vector<int> prev(n);
        prev[red.permutation[0]] = w;
        for (int k = 1; k < n; ++k) prev[red.permutation[k]] = verts[k - 1];
        verts = std::move(prev);
    }

    SignedGraph g(static_cast<int>(seq.size()));
    for (const PendingEdge& e : acc) g.add_edge(e.u, e.v, e.sign);
    return g;
}

}  // namespace sgraph
