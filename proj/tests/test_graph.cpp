#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace hr = hamming_radio;
using namespace testing_support;

TEST(GraphSpec, DimensionAndVertexCount)
{
    const auto k32 = hr::make_graph_spec({{3, 2}});
    EXPECT_EQ(k32.dimension(), 2);
    EXPECT_EQ(k32.vertex_count(), 9u);

    const auto k34 = hr::make_graph_spec({{3, 4}});
    EXPECT_EQ(k34.dimension(), 4);
    EXPECT_EQ(k34.vertex_count(), 81u);

    const auto mixed = hr::make_graph_spec({{3, 1}, {4, 2}});
    EXPECT_EQ(mixed.dimension(), 3);
    EXPECT_EQ(mixed.vertex_count(), 48u);
    EXPECT_EQ(mixed.prefix_t(0), 1);
    EXPECT_EQ(mixed.prefix_t(1), 3);
    EXPECT_EQ(mixed.alphabet(0), 3);
    EXPECT_EQ(mixed.alphabet(2), 4);
    EXPECT_EQ(mixed.to_string(), "3^1 x 4^2");
}

TEST(GraphSpec, RejectsBadFactors)
{
    auto code_of = [](std::vector<hr::Factor> f) {
        try {
            hr::make_graph_spec(std::move(f));
        } catch (const hr::Error &e) {
            return e.code();
        }
        return hr::Errc::ParseError;
    };
    EXPECT_EQ(code_of({}), hr::Errc::EmptySpec);
    EXPECT_EQ(code_of({{1, 3}}), hr::Errc::InvalidFactor);
    EXPECT_EQ(code_of({{3, 0}}), hr::Errc::InvalidFactor);
    EXPECT_EQ(code_of({{4, 1}, {3, 1}}), hr::Errc::NonIncreasingFactors);
    EXPECT_EQ(code_of({{3, 1}, {3, 1}}), hr::Errc::NonIncreasingFactors);
}

TEST(GraphSpec, HugeSpecIsRepresentableButNotEnumerable)
{
    const auto big = hr::make_graph_spec({{4, 40}});
    EXPECT_FALSE(big.vertex_count_fits());
    EXPECT_FALSE(big.enumerable());
    EXPECT_THROW(big.vertex_count(), hr::Error);
    EXPECT_EQ(big.dimension(), 40);
}

TEST(Distance, SharedAndDistance)
{
    const auto k32 = hr::make_graph_spec({{3, 2}});
    const hr::Vertex a{1, 1}, b{2, 2}, c{1, 2};
    EXPECT_EQ(hr::distance(a, a, k32), 0);
    EXPECT_EQ(hr::distance(a, b, k32), 2);
    EXPECT_EQ(hr::distance(a, c, k32), 1);

    EXPECT_EQ(hr::shared_coordinates(hr::Vertex{1, 2, 3, 1}, hr::Vertex{1, 2, 3, 1}), 4);
    EXPECT_EQ(hr::shared_coordinates(hr::Vertex{1, 1, 1, 1}, hr::Vertex{1, 3, 3, 3}), 1);
    EXPECT_EQ(hr::shared_coordinates(hr::Vertex{1, 1, 1, 1}, hr::Vertex{3, 1, 1, 2}), 2);
    EXPECT_THROW(hr::shared_coordinates(hr::Vertex{1, 1}, hr::Vertex{1, 1, 1}), hr::Error);
}

TEST(Distance, GoldenRowsOfK34)
{
    const auto o = load_ordering("k34_golden.txt");
    EXPECT_EQ(hr::shared_coordinates(o[0], o[2]), 1);
    EXPECT_EQ(hr::shared_coordinates(o[0], o[3]), 2);
}

TEST(Enumerate, Lexicographic)
{
    const auto k21 = hr::make_graph_spec({{2, 1}});
    std::vector<hr::Vertex> vs(hr::enumerate_vertices(k21).begin(), hr::enumerate_vertices(k21).end());
    ASSERT_EQ(vs.size(), 2u);
    EXPECT_EQ(vs[0], (hr::Vertex{1}));
    EXPECT_EQ(vs[1], (hr::Vertex{2}));

    const auto k32 = hr::make_graph_spec({{3, 2}});
    std::vector<hr::Vertex> all;
    for (const auto &v : hr::enumerate_vertices(k32))
        all.push_back(v);
    ASSERT_EQ(all.size(), 9u);
    EXPECT_EQ(all.front(), (hr::Vertex{1, 1}));
    EXPECT_EQ(all.back(), (hr::Vertex{3, 3}));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (std::size_t i = 0; i < all.size(); ++i)
        EXPECT_EQ(hr::vertex_index(k32, all[i]), i);
}

TEST(Enumerate, MixedCountMatchesProduct)
{
    const auto spec = hr::make_graph_spec({{3, 1}, {4, 1}});
    std::set<hr::Vertex> seen;
    for (const auto &v : hr::enumerate_vertices(spec)) {
        EXPECT_TRUE(v.valid_for(spec));
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 12u);
}

TEST(Ordering, ShapeChecks)
{
    const auto k32 = hr::make_graph_spec({{3, 2}});
    EXPECT_THROW(make_ordering(k32, {{1, 1}, {2, 2}}), hr::Error);
    Rows bad(9, {1, 4});
    EXPECT_THROW(make_ordering(k32, bad), hr::Error);
    Rows repeated(9, {1, 1});
    EXPECT_NO_THROW(make_ordering(k32, repeated)); // weak orderings may repeat rows
}
