#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "permutation.hpp"
#include "violation.hpp"

namespace hamming_radio {

/// Vertex → positive integer assignment for the diameter-radio condition.
class Labeling {
public:
    explicit Labeling(GraphSpec spec) : spec_(std::move(spec)) {}

    const GraphSpec &spec() const noexcept { return spec_; }

    void assign(const Vertex &v, std::int64_t label)
    {
        if (!v.valid_for(spec_))
            throw Error(Errc::DimensionMismatch, v.to_string() + " is not a vertex of " + spec_.to_string());
        labels_[v] = label;
    }

    std::optional<std::int64_t> label(const Vertex &v) const
    {
        auto it = labels_.find(v);
        if (it == labels_.end())
            return std::nullopt;
        return it->second;
    }

    const std::map<Vertex, std::int64_t> &entries() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }

    bool is_total() const { return spec_.vertex_count_fits() && labels_.size() == spec_.vertex_count(); }

private:
    GraphSpec spec_;
    std::map<Vertex, std::int64_t> labels_;
};

/// Every radio violation (rows i and i-k, k < t, sharing >= k coordinates) and
/// every pair of repeated rows. Empty iff the ordering induces a consecutive radio labeling.
inline std::vector<ViolationReport> check_ordering(const Ordering &o)
{
    std::vector<ViolationReport> reports;
    const int t = o.spec().dimension();
    for (std::size_t i = 1; i < o.size(); ++i) {
        const int reach = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t - 1), i));
        for (int k = 1; k <= reach; ++k) {
            const int shared = shared_coordinates(o[i], o[i - static_cast<std::size_t>(k)]);
            if (shared >= k)
                reports.push_back(make_report(RadioViolation{i + 1, k, shared}));
        }
    }

    std::unordered_map<Vertex, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < o.size(); ++i)
        seen[o[i]].push_back(i + 1);
    std::vector<Repetition> repeats;
    for (const auto &[v, rows] : seen)
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b)
                repeats.push_back({rows[a], rows[b]});
    std::sort(repeats.begin(), repeats.end(),
              [](const Repetition &x, const Repetition &y) {
                  return std::pair(x.first, x.second) < std::pair(y.first, y.second);
              });
    for (const auto &r : repeats)
        reports.push_back(make_report(r));
    return reports;
}

/// Fast-fail variant of check_ordering for inner loops.
inline bool is_radio_ordering(const Ordering &o)
{
    const int t = o.spec().dimension();
    for (std::size_t i = 1; i < o.size(); ++i) {
        const int reach = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t - 1), i));
        for (int k = 1; k <= reach; ++k)
            if (shared_coordinates(o[i], o[i - static_cast<std::size_t>(k)]) >= k)
                return false;
    }
    std::vector<bool> used(o.size(), false);
    for (const auto &row : o.rows()) {
        const auto index = vertex_index(o.spec(), row);
        if (used[index])
            return false;
        used[index] = true;
    }
    return true;
}

/// Greedy labeling: f(v^1) = 1, each later row takes the least integer above its
/// predecessor that satisfies the radio condition against all earlier rows.
inline std::vector<std::int64_t> induced_labels(const Ordering &o)
{
    const int t = o.spec().dimension();
    std::vector<std::int64_t> labels;
    labels.reserve(o.size());
    std::unordered_map<Vertex, std::size_t> seen;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (auto [it, fresh] = seen.emplace(o[i], i); !fresh)
            throw Error(Errc::RepetitionError, "rows " + std::to_string(it->second + 1) + " and " +
                                                   std::to_string(i + 1) + " repeat " + o[i].to_string());
        if (i == 0) {
            labels.push_back(1);
            continue;
        }
        // Every earlier label is below the candidate, so |x - f_j| = x - f_j.
        std::int64_t x = labels.back() + 1;
        for (std::size_t j = 0; j < i; ++j) {
            const int required = t + 1 - distance(o[i], o[j], o.spec());
            x = std::max(x, labels[j] + required);
        }
        labels.push_back(x);
    }
    return labels;
}

inline Labeling induced_labeling(const Ordering &o)
{
    const auto labels = induced_labels(o);
    Labeling out(o.spec());
    for (std::size_t i = 0; i < o.size(); ++i)
        out.assign(o[i], labels[i]);
    return out;
}

/// Smallest label in {1..N} that the labeling misses; nullopt when consecutive.
inline std::optional<std::int64_t> first_label_gap(const Labeling &l)
{
    const auto n = static_cast<std::int64_t>(l.spec().vertex_count());
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (const auto &[v, label] : l.entries())
        if (label >= 1 && label <= n)
            hit[static_cast<std::size_t>(label - 1)] = true;
    for (std::int64_t x = 1; x <= n; ++x)
        if (!hit[static_cast<std::size_t>(x - 1)])
            return x;
    return std::nullopt;
}

/// True iff the labeling is a bijection onto {1..N}.
inline bool is_consecutive(const Labeling &l)
{
    return l.is_total() && !first_label_gap(l);
}

/// Checks every unordered vertex pair directly against |f(u) - f(v)| >= t + 1 - d(u, v).
/// O(N^2 t); independent of any ordering.
inline std::vector<ViolationReport> verify_radio(const Labeling &l)
{
    std::vector<std::pair<const Vertex *, std::int64_t>> entries;
    entries.reserve(l.size());
    for (const auto &[v, label] : l.entries())
        entries.emplace_back(&v, label);

    std::vector<ViolationReport> reports;
    const int t = l.spec().dimension();
    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            const int required = t + 1 - distance(*entries[a].first, *entries[b].first, l.spec());
            const std::int64_t diff =
                entries[a].second > entries[b].second ? entries[a].second - entries[b].second
                                                      : entries[b].second - entries[a].second;
            if (diff < required)
                reports.push_back(make_report(LabelConflict{*entries[a].first, *entries[b].first, diff, required}));
        }
    }
    return reports;
}

/// Relabels column `col` (0-based): entry v_l becomes v_{σ(l)}.
inline Ordering permute_column(const Ordering &o, std::size_t col, const Permutation &sigma)
{
    if (col >= static_cast<std::size_t>(o.spec().dimension()))
        throw Error(Errc::ColumnOutOfRange, "column " + std::to_string(col) + " outside dimension " +
                                                std::to_string(o.spec().dimension()));
    if (sigma.size() != o.spec().alphabet(col))
        throw Error(Errc::PermutationSizeMismatch, "column " + std::to_string(col) + " needs a permutation of " +
                                                       std::to_string(o.spec().alphabet(col)) + " points");
    std::vector<Vertex> rows(o.rows().begin(), o.rows().end());
    for (auto &row : rows)
        row[col] = sigma(row[col]);
    return Ordering(o.spec(), std::move(rows));
}

} // namespace hamming_radio
