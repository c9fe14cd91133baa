#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace hamming_radio {

// Row numbers in reports are 1-based, matching the document format.

/// Rows `row` and `row - back` share `shared` >= back coordinates (back < t).
struct RadioViolation {
    std::size_t row;
    int back;
    int shared;
    friend bool operator==(const RadioViolation &, const RadioViolation &) = default;
};

/// Rows `first` < `second` are the same vertex.
struct Repetition {
    std::size_t first;
    std::size_t second;
    friend bool operator==(const Repetition &, const Repetition &) = default;
};

/// The label image misses `first_gap` (or the labeling is not total).
struct NonConsecutive {
    std::int64_t first_gap;
    friend bool operator==(const NonConsecutive &, const NonConsecutive &) = default;
};

/// Labels of u and v are `difference` apart but the radio condition asks for `required`.
struct LabelConflict {
    Vertex u;
    Vertex v;
    std::int64_t difference;
    int required;
    friend bool operator==(const LabelConflict &, const LabelConflict &) = default;
};

/// Rows `row` and `row + offset` share `shared` coordinates instead of exactly `expected`.
struct BoundaryShare {
    std::size_t row;
    int offset;
    int shared;
    int expected;
    friend bool operator==(const BoundaryShare &, const BoundaryShare &) = default;
};

/// At row `row`, `columns` columns end in a run of length `window` that fixes 1 (at most window-1 allowed).
struct RunOverflow {
    std::size_t row;
    int window;
    int columns;
    friend bool operator==(const RunOverflow &, const RunOverflow &) = default;
};

using ViolationKind =
    std::variant<RadioViolation, Repetition, NonConsecutive, LabelConflict, BoundaryShare, RunOverflow>;

struct ViolationReport {
    ViolationKind kind;
    std::string detail;

    template <typename T>
    bool is() const noexcept
    {
        return std::holds_alternative<T>(kind);
    }
    template <typename T>
    const T &as() const
    {
        return std::get<T>(kind);
    }
};

inline std::string kind_name(const ViolationKind &kind)
{
    return std::visit(
        [](const auto &k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, RadioViolation>)
                return "RadioViolation";
            else if constexpr (std::is_same_v<K, Repetition>)
                return "Repetition";
            else if constexpr (std::is_same_v<K, NonConsecutive>)
                return "NonConsecutive";
            else if constexpr (std::is_same_v<K, LabelConflict>)
                return "LabelConflict";
            else if constexpr (std::is_same_v<K, BoundaryShare>)
                return "BoundaryShare";
            else
                return "RunOverflow";
        },
        kind);
}

inline ViolationReport make_report(ViolationKind kind)
{
    std::string detail = std::visit(
        [](const auto &k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, RadioViolation>)
                return "rows " + std::to_string(k.row - static_cast<std::size_t>(k.back)) + " and " +
                       std::to_string(k.row) + " are " + std::to_string(k.back) + " apart but share " +
                       std::to_string(k.shared) + " coordinates (at most " + std::to_string(k.back - 1) +
                       " allowed)";
            else if constexpr (std::is_same_v<K, Repetition>)
                return "rows " + std::to_string(k.first) + " and " + std::to_string(k.second) +
                       " are the same vertex";
            else if constexpr (std::is_same_v<K, NonConsecutive>)
                return "label " + std::to_string(k.first_gap) + " is unused";
            else if constexpr (std::is_same_v<K, LabelConflict>)
                return "labels of " + k.u.to_string() + " and " + k.v.to_string() + " differ by " +
                       std::to_string(k.difference) + ", need " + std::to_string(k.required);
            else if constexpr (std::is_same_v<K, BoundaryShare>)
                return "rows " + std::to_string(k.row) + " and " +
                       std::to_string(k.row + static_cast<std::size_t>(k.offset)) + " share " +
                       std::to_string(k.shared) + " coordinates, boundary structure forces exactly " +
                       std::to_string(k.expected);
            else
                return "row " + std::to_string(k.row) + ": " + std::to_string(k.columns) +
                       " columns close a run of length " + std::to_string(k.window) +
                       " fixing 1 (at most " + std::to_string(k.window - 1) + " allowed)";
        },
        kind);
    return ViolationReport{std::move(kind), std::move(detail)};
}

} // namespace hamming_radio
