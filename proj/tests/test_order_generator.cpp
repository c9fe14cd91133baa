#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace hr = hamming_radio;
using namespace testing_support;

namespace {

hr::OrderGenerator load_k32_generator()
{
    auto doc = hr::parse_instruction_text(slurp(data_path("k32_generator.txt")), hr::GeneratorKind::LRU);
    return hr::OrderGenerator(doc.spec, hr::column_generators(doc.spec, hr::GeneratorKind::LRU), std::move(doc.rows));
}

/// Independent verdict for an order-generator: build the value columns with the
/// reference action, then check adjacency sharing and repetition directly.
bool ref_generator_ok(const hr::OrderGenerator &og)
{
    const int t = og.spec().dimension();
    Rows rows(og.size(), std::vector<int>(static_cast<std::size_t>(t)));
    for (std::size_t j = 0; j < static_cast<std::size_t>(t); ++j) {
        const auto values = ref_phi(og.column(j), og.spec().alphabet(j));
        for (std::size_t i = 0; i < og.size(); ++i)
            rows[i][j] = values[i];
    }
    return ref_is_consecutive_radio(rows, t);
}

} // namespace

TEST(OrderGenerator, GoldenK32)
{
    const auto og = load_k32_generator();
    EXPECT_EQ(og.materialize(), load_ordering("k32_golden.txt"));
    EXPECT_TRUE(hr::check_order_generator(og).empty());
    EXPECT_EQ(og.subscript(0, 0), 1);
    EXPECT_EQ(og.subscript(1, 1), 2);
    EXPECT_EQ(og.subscript(3, 0), 3);
    EXPECT_EQ(og.subscript(3, 1), 2);
}

TEST(OrderGenerator, FromOrderingInvertsMaterialize)
{
    const auto o = load_ordering("k34_golden.txt");
    const auto lru = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    const auto og = hr::OrderGenerator::from_ordering(o, std::vector<hr::InstructionGenerator>(4, lru));
    EXPECT_EQ(og.materialize(), o);
    EXPECT_TRUE(hr::check_order_generator(og).empty());
}

TEST(OrderGenerator, StructuralRejections)
{
    const auto spec = hr::parse_spec("3^2");
    const auto lru = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    const auto id = hr::Permutation::identity(3);
    std::vector<std::vector<hr::Permutation>> identity_rows(9, {id, id});
    EXPECT_THROW(hr::OrderGenerator::uniform(spec, lru, identity_rows), hr::Error);

    std::vector<std::vector<hr::Permutation>> short_rows(3, {id, id});
    EXPECT_THROW(hr::OrderGenerator::uniform(spec, lru, short_rows), hr::Error);

    const auto lru4 = hr::builtin_generator(hr::GeneratorKind::LRU, 4);
    auto doc = hr::parse_instruction_text(slurp(data_path("k32_generator.txt")), hr::GeneratorKind::LRU);
    EXPECT_THROW(hr::OrderGenerator::uniform(spec, lru4, doc.rows), hr::Error);
}

TEST(OrderGenerator, ConsecutiveTwoStepRunsInOneRow)
{
    // Column 1 rows 3-4 are f2 f2 (row 4 repeats row 2's value) and column 2 row 4 is f2.
    const auto spec = hr::parse_spec("3^2");
    const auto lru = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    auto doc = hr::parse_instruction_text(slurp(data_path("k32_generator.txt")), hr::GeneratorKind::LRU);
    const auto f2 = doc.rows[1][0];
    doc.rows[2][0] = f2;
    doc.rows[3][0] = f2;
    doc.rows[3][1] = f2;
    const auto og = hr::OrderGenerator::uniform(spec, lru, doc.rows);
    EXPECT_TRUE(hr::run_maps_one_to_one(std::vector{og.cell(2, 0), og.cell(3, 0)}));
    const auto reports = hr::check_order_generator(og);
    EXPECT_FALSE(reports.empty());
    EXPECT_EQ(reports.empty(), hr::check_ordering(og.materialize()).empty());
}

TEST(OrderGenerator, RunOverflowOnK33)
{
    // Two columns that repeat at distance 2 in the same row: at most one is allowed.
    const auto spec = hr::parse_spec("3^3");
    const auto lru = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    const auto id = hr::Permutation::identity(3);
    const auto set = lru.at(2, std::vector<hr::Permutation>{id});
    std::vector<std::vector<hr::Permutation>> rows(27, {set.f(3), set.f(3), set.f(3)});
    rows[0] = {id, id, id};
    rows[1] = {set.f(2), set.f(2), set.f(2)};
    rows[2] = {set.f(2), set.f(2), set.f(3)};
    const auto og = hr::OrderGenerator::uniform(spec, lru, rows);
    const auto reports = hr::check_order_generator(og);
    ASSERT_FALSE(reports.empty());
    ASSERT_TRUE(reports.front().is<hr::RunOverflow>());
    EXPECT_EQ(reports.front().as<hr::RunOverflow>(), (hr::RunOverflow{3, 2, 2}));
}

TEST(OrderGenerator, DualOracleOnRandomK33)
{
    const auto spec = hr::parse_spec("3^3");
    std::mt19937_64 rng(33);
    int agree = 0, clean = 0;
    for (const auto kind : {hr::GeneratorKind::LRU, hr::GeneratorKind::Transposition, hr::GeneratorKind::LTU,
                            hr::GeneratorKind::HistoryDependent}) {
        const auto gen = hr::builtin_generator(kind, 3);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::vector<hr::Permutation>> cols;
            if (trial % 2 == 0) {
                for (int j = 0; j < 3; ++j)
                    cols.push_back(random_column(gen, 27, rng));
            } else {
                // Start from a valid ordering found by search and perturb one cell.
                hr::SearchConfig cfg;
                cfg.seed = static_cast<std::uint64_t>(trial);
                cfg.value_order = hr::Heuristic::Randomized;
                const auto found = hr::search_ordering(spec, cfg);
                ASSERT_EQ(found.status, hr::SearchStatus::Found);
                const auto og = hr::OrderGenerator::from_ordering(*found.ordering,
                                                                  std::vector<hr::InstructionGenerator>(3, gen));
                for (std::size_t j = 0; j < 3; ++j)
                    cols.push_back(og.column(j));
                if (trial % 4 == 1) {
                    std::uniform_int_distribution<std::size_t> row(2, 26), col(0, 2);
                    std::uniform_int_distribution<int> k(2, 3);
                    const auto j = col(rng);
                    const auto i = row(rng);
                    auto &c = cols[j];
                    c[i] = gen.at(i + 1, std::span<const hr::Permutation>(c).first(i)).f(k(rng));
                    // re-legalize the suffix for history-dependent sets
                    for (std::size_t r = i + 1; r < c.size(); ++r) {
                        const auto prev_set = gen.at(r + 1, std::span<const hr::Permutation>(c).first(r));
                        if (!prev_set.contains(c[r]))
                            c[r] = prev_set.f(2);
                    }
                }
            }
            std::vector<std::vector<hr::Permutation>> rows(27, std::vector<hr::Permutation>(3));
            for (std::size_t i = 0; i < 27; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    rows[i][j] = cols[j][i];
            const auto og = hr::OrderGenerator::uniform(spec, gen, rows);
            const bool by_runs = hr::check_order_generator(og).empty();
            const bool by_rows = hr::check_ordering(og.materialize()).empty();
            EXPECT_EQ(by_runs, by_rows);
            EXPECT_EQ(by_runs, ref_generator_ok(og));
            agree += by_runs == by_rows;
            clean += by_rows;
        }
    }
    EXPECT_EQ(agree, 800);
    EXPECT_GT(clean, 100);
}
