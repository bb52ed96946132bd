#include <gtest/gtest.h>

#include "grt/group.hpp"
#include "oracle.hpp"

using grt::GroupElement;

TEST(Group, MakeGroupOrders) {
    EXPECT_EQ(grt::make_group({5}).order(), 5u);
    EXPECT_EQ(grt::make_group({4, 2}).order(), 8u);
    EXPECT_EQ(grt::make_group({1}).order(), 1u);
    EXPECT_EQ(grt::make_group({4, 2}).spec(), "Z4xZ2");
}

TEST(Group, MakeGroupRejectsBadInput) {
    EXPECT_THROW(grt::make_group(std::vector<long long>{}), grt::invalid_group_spec);
    EXPECT_THROW(grt::make_group({0}), grt::invalid_group_spec);
    EXPECT_THROW(grt::make_group({3, -2}), grt::invalid_group_spec);
}

TEST(Group, Compose) {
    const auto z3 = grt::make_group({3});
    EXPECT_EQ(z3.compose({{1}}, {{1}}), GroupElement{{2}});
    const auto g = grt::make_group({4, 2});
    EXPECT_EQ(g.compose({{3, 1}}, {{2, 1}}), (GroupElement{{1, 0}}));
    EXPECT_EQ(g.compose({{3, 1}}, g.identity()), (GroupElement{{3, 1}}));
}

TEST(Group, ComposeRejectsForeignElement) {
    const auto g = grt::make_group({4, 2});
    EXPECT_THROW(g.compose({{1}}, {{0, 0}}), grt::group_mismatch);
    EXPECT_THROW(g.compose({{4, 0}}, {{0, 0}}), grt::group_mismatch);
    EXPECT_THROW(g.inverse({{0, 2}}), grt::group_mismatch);
}

TEST(Group, Inverse) {
    const auto z5 = grt::make_group({5});
    EXPECT_EQ(z5.inverse({{2}}), GroupElement{{3}});
    EXPECT_EQ(z5.inverse(z5.identity()), z5.identity());
    const auto v4 = grt::make_group({2, 2});
    EXPECT_EQ(v4.inverse({{1, 1}}), (GroupElement{{1, 1}}));
}

TEST(Group, IndexAndElem) {
    const auto g = grt::make_group({4, 2});
    EXPECT_EQ(g.elem(0), (GroupElement{{0, 0}}));
    EXPECT_EQ(g.elem(5), (GroupElement{{2, 1}}));
    EXPECT_EQ(grt::make_group({6}).index({{4}}), 4u);
    EXPECT_THROW(g.elem(8), grt::index_error);
    for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index(g.elem(i)), i);
}

TEST(Group, IndexArithmeticMatchesOracle) {
    for (const auto& g : grt::enumerate_groups(24)) {
        const auto& f = g.factors();
        for (std::size_t a = 0; a < g.order(); ++a) {
            for (std::size_t b = 0; b < g.order(); ++b) {
                ASSERT_EQ(g.compose_index(a, b), oracle::plus(f, a, b)) << g.spec();
                ASSERT_EQ(g.quotient_index(a, b), oracle::minus(f, a, b)) << g.spec();
                ASSERT_EQ(g.index(g.compose(g.elem(a), g.elem(b))), oracle::plus(f, a, b));
            }
            ASSERT_EQ(g.compose_index(a, g.inverse_index(a)), 0u);
        }
    }
}

TEST(Group, GroupLaws) {
    for (const auto& g : grt::enumerate_groups(12)) {
        const std::size_t n = g.order();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                EXPECT_EQ(g.compose_index(a, b), g.compose_index(b, a));
                for (std::size_t c = 0; c < n; ++c)
                    ASSERT_EQ(g.compose_index(g.compose_index(a, b), c), g.compose_index(a, g.compose_index(b, c)));
            }
    }
}

TEST(Group, ParseGroup) {
    EXPECT_EQ(grt::parse_group("Z4xZ2"), grt::make_group({4, 2}));
    EXPECT_EQ(grt::parse_group("z3XZ5"), grt::make_group({3, 5}));
    EXPECT_EQ(grt::parse_group("Z1"), grt::FiniteAbelianGroup{});
    for (const char* bad : {"", "Z0", "Z", "Z4x", "4", "Z-3", "Y4", "Z4xZ0", "Z4 x Z2"})
        EXPECT_THROW(grt::parse_group(bad), grt::invalid_group_spec) << bad;
}

TEST(Group, EnumerateGroupsCountsIsomorphismClasses) {
    // Number of abelian groups of order n for n = 1..16.
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5};
    std::vector<std::size_t> counts(17, 0);
    for (const auto& g : grt::enumerate_groups(16)) ++counts[g.order()];
    for (std::size_t n = 1; n <= 16; ++n) EXPECT_EQ(counts[n], expected[n - 1]) << n;
}
