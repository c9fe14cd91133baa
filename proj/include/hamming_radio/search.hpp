#pragma once

#include <algorithm>
#include <bit>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "instruction.hpp"
#include "order_generator.hpp"
#include "verify.hpp"

namespace hamming_radio {

enum class Heuristic { Lexicographic, Randomized };

struct SearchConfig {
    std::uint64_t node_budget = 100'000'000;
    std::chrono::duration<double> time_budget{60.0};
    std::optional<std::uint64_t> seed;
    /// Fix rows 1-2 to all-1 / all-2. Sound because columns can be relabeled independently.
    bool symmetry_fixing = true;
    Heuristic column_order = Heuristic::Lexicographic;
    Heuristic value_order = Heuristic::Lexicographic;

    void validate() const
    {
        if (node_budget == 0 || time_budget.count() <= 0)
            throw Error(Errc::InvalidConfig, "search budgets must be positive");
        if ((column_order == Heuristic::Randomized || value_order == Heuristic::Randomized) && !seed)
            throw Error(Errc::InvalidConfig, "randomized heuristics need a seed");
    }
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

inline const char *to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNoSolution: return "ExhaustedNoSolution";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNoSolution;
    std::optional<Ordering> ordering;
    std::uint64_t nodes_explored = 0;
    std::size_t max_depth_reached = 0;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(std::chrono::duration<double> budget)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget))
    {
    }
    bool passed() const { return std::chrono::steady_clock::now() >= end_; }

private:
    std::chrono::steady_clock::time_point end_;
};

inline Vertex decode_vertex(const GraphSpec &spec, std::uint64_t index)
{
    std::vector<int> coords(static_cast<std::size_t>(spec.dimension()));
    for (std::size_t j = coords.size(); j-- > 0;) {
        const auto n = static_cast<std::uint64_t>(spec.alphabet(j));
        coords[j] = static_cast<int>(index % n) + 1;
        index /= n;
    }
    return Vertex(std::move(coords));
}

} // namespace detail

/// Depth-first search over rows. A candidate row is pruned when it shares k or
/// more coordinates with the row k above it (k < t) or repeats a used vertex.
inline SearchOutcome search_ordering(const GraphSpec &spec, const SearchConfig &cfg = {})
{
    cfg.validate();
    if (!spec.enumerable())
        throw Error(Errc::TooLarge, spec.to_string() + " has too many vertices to search");

    const auto n_rows = static_cast<std::size_t>(spec.vertex_count());
    const auto t = static_cast<std::size_t>(spec.dimension());
    std::mt19937_64 rng(cfg.seed.value_or(0));

    std::vector<std::size_t> columns(t);
    std::iota(columns.begin(), columns.end(), std::size_t{0});
    if (cfg.column_order == Heuristic::Randomized)
        std::shuffle(columns.begin(), columns.end(), rng);

    std::vector<std::vector<int>> rows(n_rows, std::vector<int>(t, 0));
    std::vector<bool> used(n_rows, false);
    SearchOutcome outcome;
    std::size_t depth = 0;

    auto index_of = [&](const std::vector<int> &row) {
        std::uint64_t index = 0;
        for (std::size_t j = 0; j < t; ++j)
            index = index * static_cast<std::uint64_t>(spec.alphabet(j)) + static_cast<std::uint64_t>(row[j] - 1);
        return index;
    };

    auto candidates_for = [&](std::size_t r) {
        std::vector<std::uint64_t> out;
        const int reach = static_cast<int>(std::min(t - 1, r));
        std::vector<int> shared(static_cast<std::size_t>(reach) + 1, 0);
        auto &row = rows[r];
        auto fill = [&](auto &self, std::size_t c) -> void {
            if (c == t) {
                const auto index = index_of(row);
                if (!used[index])
                    out.push_back(index);
                return;
            }
            const auto j = columns[c];
            for (int v = 1; v <= spec.alphabet(j); ++v) {
                bool ok = true;
                for (int k = 1; k <= reach; ++k)
                    if (rows[r - static_cast<std::size_t>(k)][j] == v &&
                        ++shared[static_cast<std::size_t>(k)] > k - 1)
                        ok = false;
                if (ok) {
                    row[j] = v;
                    self(self, c + 1);
                }
                for (int k = 1; k <= reach; ++k)
                    if (rows[r - static_cast<std::size_t>(k)][j] == v)
                        --shared[static_cast<std::size_t>(k)];
            }
        };
        fill(fill, 0);
        std::sort(out.begin(), out.end());
        if (cfg.value_order == Heuristic::Randomized)
            std::shuffle(out.begin(), out.end(), rng);
        return out;
    };

    auto place = [&](std::size_t r, std::uint64_t index) {
        const auto v = detail::decode_vertex(spec, index);
        for (std::size_t j = 0; j < t; ++j)
            rows[r][j] = v[j];
        used[index] = true;
    };

    if (cfg.symmetry_fixing) {
        place(0, 0);
        ++depth;
        if (n_rows > 1) {
            std::vector<int> twos(t, 2);
            place(1, index_of(twos));
            ++depth;
        }
    }
    outcome.max_depth_reached = depth;

    auto finish = [&] {
        std::vector<Vertex> vertices;
        for (const auto &r : rows)
            vertices.emplace_back(r);
        Ordering o(spec, std::move(vertices));
        if (!is_radio_ordering(o))
            throw std::logic_error("search produced an ordering that fails the radio check");
        outcome.status = SearchStatus::Found;
        outcome.ordering = std::move(o);
        return outcome;
    };

    if (depth == n_rows)
        return finish();

    struct Frame {
        std::vector<std::uint64_t> candidates;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({candidates_for(depth)});
    const detail::Deadline deadline(cfg.time_budget);

    while (!stack.empty()) {
        auto &frame = stack.back();
        if (frame.next == frame.candidates.size()) {
            stack.pop_back();
            if (stack.empty())
                break;
            --depth;
            used[index_of(rows[depth])] = false;
            continue;
        }
        place(depth, frame.candidates[frame.next++]);
        ++depth;
        ++outcome.nodes_explored;
        outcome.max_depth_reached = std::max(outcome.max_depth_reached, depth);
        if (depth == n_rows)
            return finish();
        if (outcome.nodes_explored >= cfg.node_budget ||
            ((outcome.nodes_explored & 0x3ff) == 0 && deadline.passed())) {
            outcome.status = SearchStatus::BudgetExceeded;
            return outcome;
        }
        stack.push_back({candidates_for(depth)});
    }
    outcome.status = SearchStatus::ExhaustedNoSolution;
    return outcome;
}

/// Columns (0-based) holding f_2 in each row of the LRU order-generator of a K_3^4
/// ordering. Rows 1 and 2 are reported as {} and {0,1,2,3}.
inline std::vector<std::vector<int>> k34_f2_columns(const Ordering &o)
{
    if (!(o.spec() == make_graph_spec({{3, 4}})))
        throw Error(Errc::ShapeError, "expected an ordering of K_3^4");
    const auto lru = builtin_generator(GeneratorKind::LRU, 3);
    const auto og = OrderGenerator::from_ordering(o, std::vector<InstructionGenerator>(4, lru));
    const auto f2 = lru.at(2, std::vector<Permutation>{Permutation::identity(3)}).f(2);
    std::vector<std::vector<int>> out(og.size());
    for (std::size_t i = 1; i < og.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (og.cell(i, j) == f2)
                out[i].push_back(static_cast<int>(j));
    return out;
}

/// In the reduced K_3^4 space every row after the second holds exactly one f_2,
/// never in the column used by the row above.
constexpr bool k34_placement_allowed(int previous_column, int column) noexcept
{
    return previous_column != column && column >= 0 && column < 4;
}

namespace detail {

/// Reduced K_3^4 walk in Z_3^4 coordinates (entry e stored as e - 1). Under LRU each
/// column's arrangement after row 2 is (current, previous, other) and other = -(current +
/// previous), so every step adds a direction in {+1, -1}^4 and each row negates exactly
/// one coordinate of that direction: the column holding its f_2.
class K34Walk {
public:
    static constexpr int kVertices = 81;
    static constexpr int kRows = 81;
    static constexpr int kCols = 4;
    static constexpr int kBlock = 27;

    K34Walk(const SearchConfig &cfg, SearchOutcome &outcome)
        : cfg_(cfg), outcome_(outcome), deadline_(cfg.time_budget),
          shuffle_(cfg.value_order == Heuristic::Randomized || cfg.column_order == Heuristic::Randomized),
          rng_(cfg.seed.value_or(0))
    {
        for (int v = 0; v < kVertices; ++v)
            for (unsigned d = 0; d < 16; ++d) {
                int out = 0;
                for (int j = 0; j < kCols; ++j)
                    out = out * 3 + (digit(v, j) + ((d >> j) & 1u ? 2 : 1)) % 3;
                step_[static_cast<std::size_t>(v)][d] = static_cast<std::uint8_t>(out);
            }
    }

    static int digit(int v, int j) { return v / kPow3[static_cast<std::size_t>(j)] % 3; }

    /// Positions of a Found walk, or nothing. Throws nothing; budget state is left in outcome.
    std::optional<std::vector<int>> run()
    {
        if (auto found = periodic())
            return found;
        if (budget_hit_)
            return std::nullopt;
        return plain();
    }

    bool budget_hit() const { return budget_hit_; }
    const std::vector<int> &flips() const { return flips_; }

private:
    static constexpr std::array<int, 4> kPow3{27, 9, 3, 1};

    int advance(int v, unsigned d) const { return step_[static_cast<std::size_t>(v)][d]; }

    bool tick(std::size_t depth)
    {
        ++outcome_.nodes_explored;
        outcome_.max_depth_reached = std::max(outcome_.max_depth_reached, depth);
        if (outcome_.nodes_explored >= cfg_.node_budget ||
            ((outcome_.nodes_explored & 0x3fff) == 0 && deadline_.passed()))
            budget_hit_ = true;
        return !budget_hit_;
    }

    std::array<int, kCols> column_order()
    {
        std::array<int, kCols> order{0, 1, 2, 3};
        if (shuffle_)
            std::shuffle(order.begin(), order.end(), rng_);
        return order;
    }

    void reset(std::size_t rows)
    {
        pos_.assign(rows, 0);
        dir_.assign(rows, 0);
        flips_.assign(rows, -1);
        used_.fill(false);
        pos_[1] = advance(0, 0);
    }

    /// Walks whose flip sequence repeats every 27 rows. Then row 27 + k is the image of
    /// row k under g(v) = Av + D, where A negates the coordinates flipped an odd number of
    /// times per period, so a 27-row block whose three g-images partition Z_3^4 closes into
    /// a full ordering. The 8 x 81 choices of (A, D) are tried in turn.
    std::optional<std::vector<int>> periodic()
    {
        std::vector<std::pair<unsigned, int>> maps;
        for (unsigned negate = 1; negate < 16; ++negate)
            if (std::popcount(negate) % 2 == 1)
                for (int shift = 0; shift < kVertices; ++shift)
                    maps.emplace_back(negate, shift);
        if (shuffle_)
            std::shuffle(maps.begin(), maps.end(), rng_);

        for (const auto &[negate, shift] : maps) {
            image_ = [&] {
                std::array<std::uint8_t, kVertices> g{};
                for (int v = 0; v < kVertices; ++v) {
                    int out = 0;
                    for (int j = 0; j < kCols; ++j) {
                        const int a = (negate >> j) & 1u ? (3 - digit(v, j)) % 3 : digit(v, j);
                        out = out * 3 + (a + digit(shift, j)) % 3;
                    }
                    g[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(out);
                }
                return g;
            }();
            negate_ = negate;
            reset(kBlock + 2);
            if (!claim(0) || !claim(pos_[1]))
                continue;
            if (block(2))
                return unfold();
            if (budget_hit_)
                return std::nullopt;
        }
        return std::nullopt;
    }

    bool claim(int v)
    {
        const int a = v, b = image_[static_cast<std::size_t>(a)], c = image_[static_cast<std::size_t>(b)];
        if (a == b || b == c || a == c || used_[static_cast<std::size_t>(a)] || used_[static_cast<std::size_t>(b)] ||
            used_[static_cast<std::size_t>(c)])
            return false;
        used_[static_cast<std::size_t>(a)] = used_[static_cast<std::size_t>(b)] = used_[static_cast<std::size_t>(c)] = true;
        return true;
    }

    void release(int v)
    {
        const int b = image_[static_cast<std::size_t>(v)];
        used_[static_cast<std::size_t>(v)] = used_[static_cast<std::size_t>(b)] =
            used_[static_cast<std::size_t>(image_[static_cast<std::size_t>(b)])] = false;
    }

    bool block(std::size_t row)
    {
        if (row == kBlock) {
            // Row 27 must be g(row 0) = D and the step into row 28 must be A * (1,1,1,1).
            // Both flips have to differ from their neighbours, including the repeated row-2 flip.
            for (int c = 0; c < kCols; ++c) {
                if (c == flips_[row - 1])
                    continue;
                const unsigned d = dir_[row - 1] ^ (1u << c);
                const unsigned change = d ^ negate_;
                if (advance(pos_[row - 1], d) != image_[0] || std::popcount(change) != 1)
                    continue;
                const int next = std::countr_zero(change);
                if (next == c || next == flips_[2])
                    continue;
                flips_[row] = c;
                flips_[row + 1] = next;
                return true;
            }
            return false;
        }
        for (int c : column_order()) {
            if (!k34_placement_allowed(flips_[row - 1], c))
                continue;
            const unsigned d = dir_[row - 1] ^ (1u << c);
            const int z = advance(pos_[row - 1], d);
            if (!claim(z))
                continue;
            pos_[row] = z;
            dir_[row] = d;
            flips_[row] = c;
            if (!tick(row + 1))
                return false;
            if (block(row + 1))
                return true;
            if (budget_hit_)
                return false;
            release(z);
        }
        return false;
    }

    std::vector<int> unfold()
    {
        flips_.resize(kRows, -1);
        for (std::size_t i = kBlock + 2; i < kRows; ++i)
            flips_[i] = flips_[i - kBlock];
        return positions_from_flips();
    }

    std::vector<int> positions_from_flips() const
    {
        std::vector<int> pos{0, advance(0, 0)};
        unsigned d = 0;
        for (std::size_t i = 2; i < kRows; ++i) {
            d ^= 1u << flips_[i];
            pos.push_back(advance(pos.back(), d));
        }
        return pos;
    }

    /// Unrestricted depth-first search over the whole reduced space; only reached if the
    /// periodic family is exhausted, so ExhaustedNoSolution here is a real verdict.
    std::optional<std::vector<int>> plain()
    {
        reset(kRows);
        used_[0] = used_[static_cast<std::size_t>(pos_[1])] = true;
        if (walk(2))
            return positions_from_flips();
        return std::nullopt;
    }

    bool walk(std::size_t row)
    {
        if (row == kRows)
            return true;
        for (int c : column_order()) {
            if (!k34_placement_allowed(flips_[row - 1], c))
                continue;
            const unsigned d = dir_[row - 1] ^ (1u << c);
            const int z = advance(pos_[row - 1], d);
            if (used_[static_cast<std::size_t>(z)])
                continue;
            used_[static_cast<std::size_t>(z)] = true;
            pos_[row] = z;
            dir_[row] = d;
            flips_[row] = c;
            if (!tick(row + 1))
                return false;
            if (walk(row + 1))
                return true;
            if (budget_hit_)
                return false;
            used_[static_cast<std::size_t>(z)] = false;
        }
        return false;
    }

    const SearchConfig &cfg_;
    SearchOutcome &outcome_;
    Deadline deadline_;
    bool shuffle_;
    std::mt19937_64 rng_;
    bool budget_hit_ = false;
    std::array<std::array<std::uint8_t, 16>, kVertices> step_{};
    std::array<std::uint8_t, kVertices> image_{};
    unsigned negate_ = 0;
    std::array<bool, kVertices> used_{};
    std::vector<int> pos_;
    std::vector<unsigned> dir_;
    std::vector<int> flips_;
};

} // namespace detail

/// Backtracking over the position of the single f_2 per row of a K_3^4
/// order-generator with Δ_3 = {(12), (123)} on every column: consecutive rows use
/// different columns and rows repeating an earlier vertex are rejected. Those two
/// rules make every walk a valid ordering.
///
/// Walks whose f_2 columns repeat with period 27 are tried first; they reduce the
/// search to one 27-row block and succeed within a fraction of a second. The
/// unrestricted search follows only if that family runs dry.
inline SearchOutcome search_k34_reduced(const SearchConfig &cfg = {})
{
    cfg.validate();
    using detail::K34Walk;
    SearchOutcome outcome;
    outcome.max_depth_reached = 2;
    K34Walk walk(cfg, outcome);
    const auto path = walk.run();
    if (!path) {
        outcome.status = walk.budget_hit() ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNoSolution;
        return outcome;
    }

    const auto spec = make_graph_spec({{3, 4}});
    const auto lru = builtin_generator(GeneratorKind::LRU, 3);
    const auto set = lru.at(2, std::vector<Permutation>{Permutation::identity(3)});
    const auto &f2 = set.f(2);
    const auto &f3 = set.f(3);
    const auto &flips = walk.flips();
    std::vector<std::vector<Permutation>> cells(K34Walk::kRows, std::vector<Permutation>(K34Walk::kCols));
    for (std::size_t i = 0; i < K34Walk::kRows; ++i)
        for (std::size_t j = 0; j < K34Walk::kCols; ++j)
            cells[i][j] = i == 0 ? Permutation::identity(3)
                          : i == 1 ? f2
                                   : (flips[i] == static_cast<int>(j) ? f2 : f3);
    const auto og = OrderGenerator::uniform(spec, lru, std::move(cells));
    auto o = og.materialize();
    for (std::size_t i = 0; i < K34Walk::kRows; ++i)
        for (int j = 0; j < K34Walk::kCols; ++j)
            if (o[i][static_cast<std::size_t>(j)] != K34Walk::digit((*path)[i], j) + 1)
                throw std::logic_error("reduced K_3^4 walk disagrees with phi");
    if (!check_ordering(o).empty() || !boundary_structure_check(o).empty())
        throw std::logic_error("reduced search produced an invalid ordering");
    outcome.status = SearchStatus::Found;
    outcome.max_depth_reached = K34Walk::kRows;
    outcome.ordering = std::move(o);
    return outcome;
}

struct GracefulnessResult {
    bool graceful = false;
    std::optional<Ordering> witness;
};

/// Tries all orderings that start with all-1, all-2 (every ordering reduces to
/// one of these by column relabeling) and checks each induced labeling directly.
inline GracefulnessResult brute_force_radio_graceful(const GraphSpec &spec, std::uint64_t max_vertices = 9)
{
    if (!spec.vertex_count_fits() || spec.vertex_count() > max_vertices)
        throw Error(Errc::TooLarge, spec.to_string() + " exceeds the brute-force cap of " +
                                        std::to_string(max_vertices) + " vertices");
    std::vector<Vertex> all(enumerate_vertices(spec).begin(), enumerate_vertices(spec).end());
    const Vertex ones(std::vector<int>(static_cast<std::size_t>(spec.dimension()), 1));
    const Vertex twos(std::vector<int>(static_cast<std::size_t>(spec.dimension()), 2));
    std::vector<Vertex> rest;
    for (const auto &v : all)
        if (v != ones && v != twos)
            rest.push_back(v);

    do {
        std::vector<Vertex> rows{ones, twos};
        rows.insert(rows.end(), rest.begin(), rest.end());
        Ordering o(spec, std::move(rows));
        const auto labeling = induced_labeling(o);
        if (is_consecutive(labeling) && verify_radio(labeling).empty())
            return {true, std::move(o)};
    } while (std::next_permutation(rest.begin(), rest.end()));
    return {false, std::nullopt};
}

} // namespace hamming_radio
