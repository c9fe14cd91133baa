#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace hr = hamming_radio;
using namespace testing_support;

namespace {
hr::Permutation P(const char *text, int n) { return hr::parse_permutation(text, n); }
} // namespace

TEST(Permutation, ParsingForms)
{
    EXPECT_TRUE(P("id", 3).is_identity());
    EXPECT_TRUE(P("()", 4).is_identity());
    EXPECT_EQ(one_line(P("(123)", 3)), (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(P("(1,2,3)", 3), P("(123)", 3));
    EXPECT_EQ(P("(1 2 3)", 3), P("(123)", 3));
    EXPECT_EQ(P("[2,3,1]", 3), P("(123)", 3));
    EXPECT_EQ(one_line(P("(12)(34)", 4)), (std::vector<int>{2, 1, 4, 3}));
    EXPECT_THROW(P("(14)", 3), hr::Error);
    EXPECT_THROW(P("[1,1,2]", 3), hr::Error);
    EXPECT_THROW(P("(1x)", 3), hr::Error);
}

TEST(Permutation, CycleStringRoundTrip)
{
    for (const char *c : {"id", "(12)", "(123)", "(132)", "(13)"})
        EXPECT_EQ(P(c, 3).to_cycle_string(), c);
    EXPECT_EQ(P("(12)(34)", 4).to_cycle_string(), "(12)(34)");
}

TEST(Permutation, ComposeAppliesLeftFirst)
{
    const auto id = hr::Permutation::identity(3);
    const auto a = P("(12)", 3), b = P("(123)", 3);
    EXPECT_EQ(hr::compose(a, id), a);
    EXPECT_EQ(hr::compose(id, a), a);
    EXPECT_EQ(hr::compose(a, b)(1), 3);
    // compare against point-wise evaluation
    for (int x = 1; x <= 3; ++x)
        EXPECT_EQ(hr::compose(a, b)(x), b(a(x)));
    EXPECT_THROW(hr::compose(a, hr::Permutation::identity(4)), hr::Error);
}

TEST(Permutation, RunFixingOne)
{
    const auto f2 = P("(12)", 3), f3 = P("(123)", 3);
    std::vector<hr::Permutation> run{f2, f3, f3};
    EXPECT_EQ(hr::compose_run(run)(1), 1);
    EXPECT_THROW(hr::compose_run(std::vector<hr::Permutation>{}), hr::Error);
}

TEST(Permutation, InverseIsGroupInverse)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> images{1, 2, 3, 4, 5};
        std::shuffle(images.begin(), images.end(), rng);
        const hr::Permutation p(images);
        EXPECT_TRUE(hr::compose(p, p.inverse()).is_identity());
        EXPECT_TRUE(hr::compose(p.inverse(), p).is_identity());
    }
}

TEST(Arrangement, Action)
{
    const auto a0 = hr::Arrangement::initial(3);
    const auto same = hr::act(hr::Permutation::identity(3), a0);
    EXPECT_TRUE(std::ranges::equal(same.values(), a0.values()));
    const auto a1 = hr::act(P("(12)", 3), a0);
    EXPECT_EQ(std::vector<int>(a1.values().begin(), a1.values().end()), (std::vector<int>{2, 1, 3}));
    const auto a2 = hr::act(P("(123)", 3), a1);
    EXPECT_EQ(std::vector<int>(a2.values().begin(), a2.values().end()), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(a2.front(), 3);
    EXPECT_EQ(a2.position_of(1), 3);
}

TEST(Arrangement, ActionMatchesReference)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> images{1, 2, 3, 4}, values{1, 2, 3, 4};
        std::shuffle(images.begin(), images.end(), rng);
        std::shuffle(values.begin(), values.end(), rng);
        const auto got = hr::act(hr::Permutation(images), hr::Arrangement(values));
        EXPECT_EQ(std::vector<int>(got.values().begin(), got.values().end()), ref_act(images, values));
    }
}
