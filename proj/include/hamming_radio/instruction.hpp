#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace hamming_radio {

/// Δ_n = {f_2, ..., f_n} ⊂ S_n with f_k(k) = 1. Instruction f_k moves the entry
/// at position k of an arrangement to the front.
class InstructionSet {
public:
    /// `instructions[k-2]` is f_k.
    InstructionSet(int n, std::vector<Permutation> instructions) : n_(n), instructions_(std::move(instructions))
    {
        if (static_cast<int>(instructions_.size()) != n - 1)
            throw Error(Errc::InvalidInstructionSet, "instruction set for n = " + std::to_string(n) + " needs " +
                                                         std::to_string(n - 1) + " elements");
        for (int k = 2; k <= n; ++k) {
            const auto &f = instructions_[static_cast<std::size_t>(k - 2)];
            if (f.size() != n)
                throw Error(Errc::InvalidInstructionSet, "f_" + std::to_string(k) + " has the wrong size");
            if (f(k) != 1)
                throw Error(Errc::InvalidInstructionSet, "f_" + std::to_string(k) + " = " + f.to_cycle_string() +
                                                             " does not send " + std::to_string(k) + " to 1");
        }
    }

    int n() const noexcept { return n_; }
    const Permutation &f(int k) const { return instructions_.at(static_cast<std::size_t>(k - 2)); }
    std::span<const Permutation> instructions() const noexcept { return instructions_; }

    /// k with f_k == sigma.
    std::optional<int> subscript_of(const Permutation &sigma) const
    {
        for (std::size_t i = 0; i < instructions_.size(); ++i)
            if (instructions_[i] == sigma)
                return static_cast<int>(i) + 2;
        return std::nullopt;
    }

    bool contains(const Permutation &sigma) const { return subscript_of(sigma).has_value(); }

private:
    int n_;
    std::vector<Permutation> instructions_;
};

enum class GeneratorKind { Transposition, LRU, LTU, HistoryDependent, Custom };

inline const char *to_string(GeneratorKind kind)
{
    switch (kind) {
    case GeneratorKind::Transposition: return "transposition";
    case GeneratorKind::LRU: return "lru";
    case GeneratorKind::LTU: return "ltu";
    case GeneratorKind::HistoryDependent: return "history";
    case GeneratorKind::Custom: return "custom";
    }
    return "?";
}

inline std::optional<GeneratorKind> parse_generator_kind(std::string_view name)
{
    if (name == "transposition")
        return GeneratorKind::Transposition;
    if (name == "lru")
        return GeneratorKind::LRU;
    if (name == "ltu")
        return GeneratorKind::LTU;
    if (name == "history")
        return GeneratorKind::HistoryDependent;
    return std::nullopt;
}

/// Δ_n^i: chooses the instruction set for (1-based) position i >= 2 from the
/// instructions σ_1..σ_{i-1} already placed in the column.
class InstructionGenerator {
public:
    using Rule = std::function<InstructionSet(std::size_t position, std::span<const Permutation> history)>;

    InstructionGenerator(int n, GeneratorKind kind, Rule rule, bool constant = false)
        : n_(n), kind_(kind), rule_(std::move(rule)), constant_(constant)
    {
    }

    int n() const noexcept { return n_; }
    GeneratorKind kind() const noexcept { return kind_; }
    bool is_constant() const noexcept { return constant_; }

    InstructionSet at(std::size_t position, std::span<const Permutation> history) const
    {
        auto set = rule_(position, history);
        if (set.n() != n_)
            throw Error(Errc::InvalidInstructionSet, "generator for n = " + std::to_string(n_) +
                                                         " produced a set for n = " + std::to_string(set.n()));
        return set;
    }

private:
    int n_;
    GeneratorKind kind_;
    Rule rule_;
    bool constant_;
};

inline InstructionGenerator constant_generator(InstructionSet set, GeneratorKind kind = GeneratorKind::Custom)
{
    const int n = set.n();
    return InstructionGenerator(
        n, kind, [set = std::move(set)](std::size_t, std::span<const Permutation>) { return set; }, true);
}

namespace detail {

inline InstructionSet make_set(int n, const std::function<std::vector<int>(int k)> &cycle_for)
{
    std::vector<Permutation> fs;
    for (int k = 2; k <= n; ++k)
        fs.push_back(Permutation::from_cycles(n, {cycle_for(k)}));
    return InstructionSet(n, std::move(fs));
}

} // namespace detail

/// Transposition: f_k = (1k). LRU: f_k = (12...k). LTU: f_2 = (12), f_k = (12k).
/// HistoryDependent: with k' = σ_{i-1}⁻¹(1) (1 after the identity), f_{k'} = (1k')
/// and f_k = (1k'k) for k != k'.
inline InstructionGenerator builtin_generator(GeneratorKind kind, int n)
{
    if (n < 3)
        throw Error(Errc::UnsupportedN, "builtin generators need n >= 3, got " + std::to_string(n));
    switch (kind) {
    case GeneratorKind::Transposition:
        return constant_generator(detail::make_set(n, [](int k) { return std::vector<int>{1, k}; }), kind);
    case GeneratorKind::LRU:
        return constant_generator(detail::make_set(n,
                                                   [](int k) {
                                                       std::vector<int> cycle;
                                                       for (int x = 1; x <= k; ++x)
                                                           cycle.push_back(x);
                                                       return cycle;
                                                   }),
                                  kind);
    case GeneratorKind::LTU:
        return constant_generator(
            detail::make_set(n, [](int k) { return k == 2 ? std::vector<int>{1, 2} : std::vector<int>{1, 2, k}; }),
            kind);
    case GeneratorKind::HistoryDependent: {
        std::vector<InstructionSet> by_previous;
        for (int prev = 1; prev <= n; ++prev)
            by_previous.push_back(detail::make_set(n, [prev](int k) {
                if (prev == 1 || k == prev)
                    return std::vector<int>{1, k};
                return std::vector<int>{1, prev, k};
            }));
        return InstructionGenerator(n, kind,
                                    [by_previous = std::move(by_previous)](std::size_t,
                                                                           std::span<const Permutation> history) {
                                        const int prev = history.empty() ? 1 : history.back().inverse()(1);
                                        return by_previous[static_cast<std::size_t>(prev - 1)];
                                    });
    }
    case GeneratorKind::Custom: break;
    }
    throw Error(Errc::UnsupportedN, "no builtin generator of kind custom");
}

/// Validates B_n membership: σ_1 = id, σ_2 = f_2, σ_i drawn from Δ_n^i(σ_1..σ_{i-1}).
inline void check_membership(std::span<const Permutation> column, const InstructionGenerator &gen)
{
    for (std::size_t i = 0; i < column.size(); ++i) {
        const auto &sigma = column[i];
        if (sigma.size() != gen.n())
            throw Error(Errc::InvalidMembership, "row " + std::to_string(i + 1) + " holds a permutation of size " +
                                                     std::to_string(sigma.size()));
        if (i == 0) {
            if (!sigma.is_identity())
                throw Error(Errc::InvalidMembership, "row 1 must be the identity");
            continue;
        }
        const auto set = gen.at(i + 1, column.first(i));
        if (i == 1 && sigma != set.f(2))
            throw Error(Errc::InvalidMembership, "row 2 must be f_2");
        if (!set.contains(sigma))
            throw Error(Errc::InvalidMembership, "row " + std::to_string(i + 1) + " instruction " +
                                                     sigma.to_cycle_string() + " is not in the instruction set");
    }
}

/// The arrangements o_1 = (1..n), o_i = σ_i · o_{i-1}.
inline std::vector<Arrangement> arrangements(std::span<const Permutation> column, const InstructionGenerator &gen)
{
    check_membership(column, gen);
    std::vector<Arrangement> out;
    if (column.empty())
        return out;
    out.push_back(Arrangement::initial(gen.n()));
    for (std::size_t i = 1; i < column.size(); ++i)
        out.push_back(act(column[i], out.back()));
    return out;
}

/// φ_n: instruction column → coordinate column (first entries of the arrangements).
inline std::vector<int> phi(std::span<const Permutation> column, const InstructionGenerator &gen)
{
    std::vector<int> values;
    for (const auto &o : arrangements(column, gen))
        values.push_back(o.front());
    return values;
}

/// φ_n⁻¹: for each step pick f_k where k is the position of the next value in the current arrangement.
inline std::vector<Permutation> phi_inverse(std::span<const int> values, const InstructionGenerator &gen)
{
    const int n = gen.n();
    if (!values.empty() && values[0] != 1)
        throw Error(Errc::NotInA_n, "column must start with 1");
    if (values.size() > 1 && values[1] != 2)
        throw Error(Errc::NotInA_n, "column must continue with 2");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > n)
            throw Error(Errc::NotInA_n, "value " + std::to_string(values[i]) + " outside {1.." + std::to_string(n) +
                                            "}");
        if (i > 0 && values[i] == values[i - 1])
            throw Error(Errc::NotInA_n, "rows " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                            " repeat value " + std::to_string(values[i]));
    }

    std::vector<Permutation> column;
    if (values.empty())
        return column;
    column.push_back(Permutation::identity(n));
    auto current = Arrangement::initial(n);
    for (std::size_t i = 1; i < values.size(); ++i) {
        const auto set = gen.at(i + 1, column);
        const auto &sigma = set.f(current.position_of(values[i]));
        current = act(sigma, current);
        column.push_back(sigma);
    }
    return column;
}

/// True iff the left-to-right product of the run fixes 1, i.e. the generated
/// column repeats a value across the run.
inline bool run_maps_one_to_one(std::span<const Permutation> run)
{
    if (run.empty())
        throw Error(Errc::SizeMismatch, "empty run");
    int x = 1;
    for (const auto &sigma : run) {
        if (sigma.size() != run.front().size())
            throw Error(Errc::SizeMismatch, "run mixes permutation sizes");
        x = sigma(x);
    }
    return x == 1;
}

/// A run of instructions together with their subscripts in the sets they were drawn from.
struct InstructionRun {
    std::vector<Permutation> steps;
    std::vector<int> subscripts;

    /// e.g. "f2f3f3"
    std::string to_string() const
    {
        std::string out;
        for (int k : subscripts)
            out += "f" + std::to_string(k);
        return out;
    }

    friend bool operator==(const InstructionRun &, const InstructionRun &) = default;
};

/// Λ_s^i: all runs of s instructions legal from position i given the history
/// σ_1..σ_{i-1}, whose product fixes 1. Runs are listed in subscript order.
inline std::vector<InstructionRun> enumerate_lambda(const InstructionGenerator &gen, int s, std::size_t position,
                                                    std::span<const Permutation> history,
                                                    std::uint64_t budget = 1'000'000)
{
    if (s < 1)
        throw Error(Errc::RangeError, "run length must be positive");
    if (position < 2)
        throw Error(Errc::RangeError, "runs start at position 2 or later");
    if (history.size() != position - 1)
        throw Error(Errc::RangeError, "history must hold the " + std::to_string(position - 1) +
                                          " instructions before position " + std::to_string(position));
    double count = 1;
    for (int i = 0; i < s; ++i)
        count *= gen.n() - 1;
    if (count > static_cast<double>(budget))
        throw Error(Errc::BudgetExceeded, "(n-1)^s = " + std::to_string(count) + " runs exceed the budget of " +
                                              std::to_string(budget));

    std::vector<InstructionRun> out;
    std::vector<Permutation> prefix(history.begin(), history.end());
    InstructionRun run;
    std::function<void(int)> dfs = [&](int x) {
        if (static_cast<int>(run.steps.size()) == s) {
            if (x == 1)
                out.push_back(run);
            return;
        }
        const auto set = gen.at(prefix.size() + 1, prefix);
        for (int k = 2; k <= gen.n(); ++k) {
            const auto &f = set.f(k);
            prefix.push_back(f);
            run.steps.push_back(f);
            run.subscripts.push_back(k);
            dfs(f(x));
            prefix.pop_back();
            run.steps.pop_back();
            run.subscripts.pop_back();
        }
    };
    dfs(1);
    return out;
}

} // namespace hamming_radio
