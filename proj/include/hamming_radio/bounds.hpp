#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "violation.hpp"

namespace hamming_radio {

/// Number of columns whose entries in rows i..i+k (0-based i) are pairwise distinct.
inline int alpha(const Ordering &o, std::size_t i, int k)
{
    if (k < 0 || i + static_cast<std::size_t>(k) >= o.size())
        throw Error(Errc::RangeError, "alpha needs 0 <= k and row " + std::to_string(i) + " + " +
                                          std::to_string(k) + " inside an ordering of " + std::to_string(o.size()) +
                                          " rows");
    int count = 0;
    std::vector<int> seen;
    for (std::size_t j = 0; j < static_cast<std::size_t>(o.spec().dimension()); ++j) {
        seen.assign(static_cast<std::size_t>(o.spec().alphabet(j)) + 1, 0);
        bool distinct = true;
        for (std::size_t r = i; r <= i + static_cast<std::size_t>(k) && distinct; ++r)
            distinct = seen[static_cast<std::size_t>(o[r][j])]++ == 0;
        count += distinct;
    }
    return count;
}

struct AlphaProfile {
    std::size_t row;
    std::vector<int> values; ///< values[k] = alpha(o, row, k)
};

inline AlphaProfile alpha_profile(const Ordering &o, std::size_t i, int depth)
{
    AlphaProfile profile{i, {}};
    for (int k = 0; k <= depth; ++k)
        profile.values.push_back(alpha(o, i, k));
    return profile;
}

/// 1 + n(n^2 - 1)/6; n(n^2 - 1) = (n-1)n(n+1) is always divisible by 6.
constexpr std::int64_t graceful_threshold(std::int64_t n) { return 1 + (n - 1) * n * (n + 1) / 6; }

enum class Gracefulness { NotRadioGraceful, Unknown, KnownGracefulByCitation };

inline const char *to_string(Gracefulness g)
{
    switch (g) {
    case Gracefulness::NotRadioGraceful: return "NotRadioGraceful";
    case Gracefulness::Unknown: return "Unknown";
    case Gracefulness::KnownGracefulByCitation: return "KnownGracefulByCitation";
    }
    return "?";
}

struct FactorBound {
    Factor factor;
    int prefix_t;
    std::int64_t threshold;
    bool ruled_out; ///< prefix_t >= threshold
};

struct BoundVerdict {
    std::vector<FactorBound> factors;
    Gracefulness overall = Gracefulness::Unknown;
};

/// Counting bound on t̄_k. KnownGracefulByCitation covers K_n^t with n >= 3 and
/// t <= n, where a construction is known from the literature (not built here).
inline BoundVerdict bound_verdict(const GraphSpec &spec)
{
    BoundVerdict verdict;
    bool ruled_out = false;
    for (std::size_t k = 0; k < spec.factor_count(); ++k) {
        const auto f = spec.factors()[k];
        const auto threshold = graceful_threshold(f.n);
        const bool out = spec.prefix_t(k) >= threshold;
        ruled_out = ruled_out || out;
        verdict.factors.push_back({f, spec.prefix_t(k), threshold, out});
    }
    if (ruled_out)
        verdict.overall = Gracefulness::NotRadioGraceful;
    else if (spec.factor_count() == 1 && spec.factors()[0].n >= 3 && spec.factors()[0].t <= spec.factors()[0].n)
        verdict.overall = Gracefulness::KnownGracefulByCitation;
    return verdict;
}

/// Largest n_k among factors with t̄_k = n_k(n_k^2 - 1)/6, if any.
inline std::optional<int> boundary_alphabet(const GraphSpec &spec)
{
    std::optional<int> n;
    for (std::size_t k = 0; k < spec.factor_count(); ++k) {
        const int nk = spec.factors()[k].n;
        if (spec.prefix_t(k) == graceful_threshold(nk) - 1)
            n = nk;
    }
    return n;
}

/// At the boundary t̄_k = n_k(n_k^2-1)/6, rows i and i+j must share exactly j-1
/// coordinates for every j <= n_k. Reports each pair where that fails.
inline std::vector<ViolationReport> boundary_structure_check(const Ordering &o)
{
    const auto n = boundary_alphabet(o.spec());
    if (!n)
        throw Error(Errc::NotAtBoundary, "no factor of " + o.spec().to_string() +
                                             " has prefix dimension n(n^2-1)/6");
    std::vector<ViolationReport> reports;
    for (std::size_t i = 0; i < o.size(); ++i) {
        for (int j = 1; j <= *n && i + static_cast<std::size_t>(j) < o.size(); ++j) {
            const int shared = shared_coordinates(o[i], o[i + static_cast<std::size_t>(j)]);
            if (shared != j - 1)
                reports.push_back(make_report(BoundaryShare{i + 1, j, shared, j - 1}));
        }
    }
    return reports;
}

struct SegmentSearchOptions {
    std::uint64_t node_budget = 200'000'000;
    /// Also quotient by swapping columns of equal alphabet (shared counts are invariant).
    bool sort_columns = true;
    unsigned threads = 1;
};

struct SegmentResult {
    enum class Verdict { Extensible, Dead };

    Verdict verdict = Verdict::Dead;
    /// For Dead: the first row offset (from the segment's first row) that has no valid choice.
    int dead_depth = 0;
    /// For Extensible: depth + 1 canonical rows.
    std::vector<Vertex> witness;
    std::uint64_t nodes = 0;

    bool extensible() const noexcept { return verdict == Verdict::Extensible; }
};

namespace detail {

// Rows are built column by column. Canonical form: every column is a restricted
// growth string (values appear in first-use order), and with sort_columns the
// columns of one alphabet are lexicographically non-decreasing top to bottom.
class SegmentExplorer {
public:
    SegmentExplorer(const GraphSpec &spec, int depth, const SegmentSearchOptions &options,
                    std::atomic<std::uint64_t> &nodes, std::atomic<bool> &abort)
        : t_(spec.dimension()), depth_(depth), options_(options), nodes_(nodes), abort_(abort)
    {
        alphabet_.assign(spec.alphabets().begin(), spec.alphabets().end());
        rows_.assign(static_cast<std::size_t>(depth) + 1, std::vector<int>(static_cast<std::size_t>(t_), 0));
        rows_[0].assign(static_cast<std::size_t>(t_), 1);
        rows_[1].assign(static_cast<std::size_t>(t_), 2);
        max_value_.assign(static_cast<std::size_t>(t_), 2);
        tied_.assign(static_cast<std::size_t>(t_), false);
        for (std::size_t j = 1; j < static_cast<std::size_t>(t_); ++j)
            tied_[j] = options_.sort_columns && alphabet_[j] == alphabet_[j - 1];
        deepest_ = 1;
    }

    /// Every complete choice for row `r`, in canonical enumeration order.
    template <typename Visit>
    void for_each_row(int r, Visit &&visit)
    {
        std::vector<int> shared(static_cast<std::size_t>(std::max(0, std::min(t_ - 1, r))) + 1, 0);
        fill(r, 0, shared, visit);
    }

    /// Depth-first extension from row r; true when the full segment is reached.
    bool extend(int r)
    {
        if (r > depth_)
            return true;
        bool found = false;
        for_each_row(r, [&] {
            if (found || abort_.load(std::memory_order_relaxed))
                return true;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.node_budget) {
                abort_ = true;
                return true;
            }
            deepest_ = std::max(deepest_, r);
            auto saved_max = max_value_;
            auto saved_tied = tied_;
            commit(r);
            found = extend(r + 1);
            if (!found) {
                max_value_ = std::move(saved_max);
                tied_ = std::move(saved_tied);
            }
            return found;
        });
        return found;
    }

    void place(int r, const std::vector<int> &row)
    {
        rows_[static_cast<std::size_t>(r)] = row;
        commit(r);
        deepest_ = std::max(deepest_, r);
    }

    void commit(int r)
    {
        const auto &row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t j = 0; j < row.size(); ++j) {
            max_value_[j] = std::max(max_value_[j], row[j]);
            if (j > 0)
                tied_[j] = tied_[j] && row[j] == row[j - 1];
        }
    }

    int deepest() const noexcept { return deepest_; }
    const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }

private:
    // Returns true to stop the enumeration.
    template <typename Visit>
    bool fill(int r, std::size_t j, std::vector<int> &shared, Visit &visit)
    {
        auto &row = rows_[static_cast<std::size_t>(r)];
        if (j == static_cast<std::size_t>(t_)) {
            for (int back = t_; back <= r; ++back)
                if (row == rows_[static_cast<std::size_t>(r - back)])
                    return false;
            return visit();
        }
        const int reach = std::min(t_ - 1, r);
        const int top = std::min(max_value_[j] + 1, alphabet_[j]);
        const int bottom = (tied_[j] && j > 0) ? row[j - 1] : 1;
        for (int v = bottom; v <= top; ++v) {
            bool ok = true;
            int k = 1;
            for (; k <= reach; ++k) {
                if (rows_[static_cast<std::size_t>(r - k)][j] == v && ++shared[static_cast<std::size_t>(k)] > k - 1)
                    ok = false;
            }
            if (ok) {
                row[j] = v;
                if (fill(r, j + 1, shared, visit)) {
                    undo(r, j, v, reach, shared);
                    return true;
                }
            }
            undo(r, j, v, reach, shared);
        }
        return false;
    }

    void undo(int r, std::size_t j, int v, int reach, std::vector<int> &shared)
    {
        for (int k = 1; k <= reach; ++k)
            if (rows_[static_cast<std::size_t>(r - k)][j] == v)
                --shared[static_cast<std::size_t>(k)];
    }

    int t_;
    int depth_;
    SegmentSearchOptions options_;
    std::atomic<std::uint64_t> &nodes_;
    std::atomic<bool> &abort_;
    std::vector<int> alphabet_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> max_value_;
    std::vector<bool> tied_;
    int deepest_;
};

} // namespace detail

/// Searches for depth + 1 consecutive rows that satisfy the radio condition among
/// themselves, with the first two rows fixed to all-1 and all-2 (every valid
/// ordering can be relabeled column-wise into that form). Dead proves that no
/// ordering of V(G) induces a consecutive radio labeling, since every ordering
/// contains such a segment.
inline SegmentResult segment_extension_search(const GraphSpec &spec, int depth,
                                              const SegmentSearchOptions &options = {})
{
    if (depth < 2)
        throw Error(Errc::RangeError, "segment depth must be at least 2");

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    SegmentResult result;

    // Branch on row 2; each branch is explored independently.
    struct Branch {
        std::vector<int> row;
        bool found = false;
        int deepest = 2;
        std::vector<std::vector<int>> witness;
    };
    std::vector<Branch> branches;
    {
        detail::SegmentExplorer root(spec, depth, options, nodes, abort);
        root.for_each_row(2, [&] {
            Branch b;
            b.row = root.rows()[2];
            branches.push_back(std::move(b));
            return false;
        });
    }

    auto to_vertices = [](const std::vector<std::vector<int>> &rows) {
        std::vector<Vertex> out;
        for (const auto &r : rows)
            out.emplace_back(r);
        return out;
    };

    if (branches.empty()) {
        result.dead_depth = 2;
        return result;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
    auto work = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= branches.size() || abort.load())
                return;
            if (b > first_found.load())
                continue;
            detail::SegmentExplorer explorer(spec, depth, options, nodes, abort);
            auto &branch = branches[b];
            explorer.place(2, branch.row);
            nodes.fetch_add(1);
            branch.found = explorer.extend(3);
            branch.deepest = explorer.deepest();
            if (branch.found) {
                branch.witness = explorer.rows();
                std::size_t current = first_found.load();
                while (b < current && !first_found.compare_exchange_weak(current, b)) {
                }
            }
        }
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work);
        for (auto &worker : pool)
            worker.join();
    }

    result.nodes = nodes.load();
    if (abort.load() && first_found.load() == std::numeric_limits<std::size_t>::max())
        throw Error(Errc::TooLarge, "segment search for " + spec.to_string() + " exceeded " +
                                        std::to_string(options.node_budget) + " nodes");

    if (first_found.load() != std::numeric_limits<std::size_t>::max()) {
        result.verdict = SegmentResult::Verdict::Extensible;
        result.witness = to_vertices(branches[first_found.load()].witness);
        return result;
    }
    int deepest = 2;
    for (const auto &b : branches)
        deepest = std::max(deepest, b.deepest);
    result.dead_depth = deepest + 1;
    return result;
}

} // namespace hamming_radio
