#include <gtest/gtest.h>

#include "grt/grt.hpp"
#include "oracle.hpp"

using grt::GroupRing;
using grt::make_group;

namespace {

GroupRing<grt::RationalRing> qring(std::initializer_list<long long> m) { return {make_group(m), grt::RationalRing{}}; }

std::vector<mpq_class> q(std::initializer_list<long> v) {
    std::vector<mpq_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(GroupRing, AddExample) {
    GroupRing<grt::ModRing> V(make_group({2}), grt::ModRing(5));
    const auto s = V.add(V.from_coeffs({1, 2}), V.from_coeffs({4, 4}));
    EXPECT_EQ(s.coeffs, (std::vector<std::uint64_t>{0, 1}));
}

TEST(GroupRing, ConvolveExample) {
    const auto V = qring({2});
    EXPECT_EQ(V.mul(V.from_coeffs(q({1, 2})), V.from_coeffs(q({3, 4}))).coeffs, q({11, 10}));
    EXPECT_EQ(V.mul(V.embed(5), V.from_coeffs(q({1, 2}))).coeffs, q({5, 10}));
}

TEST(GroupRing, BasisProductFollowsGroupLaw) {
    const auto V = qring({3});
    EXPECT_TRUE(V.eq(V.mul(V.basis(1), V.basis(1)), V.basis(2)));
    EXPECT_EQ(V.one().coeffs, q({1, 0, 0}));
    EXPECT_TRUE(V.eq(V.mul(V.one(), V.one()), V.one()));
    EXPECT_TRUE(V.is_zero(V.embed(0)));
}

TEST(GroupRing, AntiInvolution) {
    const auto V = qring({4});
    EXPECT_EQ(V.anti_involution(V.from_coeffs(q({1, 2, 3, 4}))).coeffs, q({1, 4, 3, 2}));
    EXPECT_TRUE(V.eq(V.anti_involution(V.one()), V.one()));
    const auto W = qring({2, 2});
    const auto a = W.from_coeffs(q({1, 2, 3, 4}));
    EXPECT_TRUE(W.eq(W.anti_involution(a), a));
}

TEST(GroupRing, ConvolutionMatchesOracle) {
    for (const auto& g : grt::enumerate_groups(16)) {
        GroupRing<grt::RationalRing> V(g, grt::RationalRing{});
        grt::Rng rng(g.order() * 31 + g.rank());
        for (int i = 0; i < 5; ++i) {
            const auto a = V.sample(rng), b = V.sample(rng);
            ASSERT_EQ(V.mul(a, b).coeffs, oracle::convolve(g.factors(), a.coeffs, b.coeffs)) << g.spec();
        }
    }
}

TEST(GroupRing, MismatchIsRejected) {
    const auto V = qring({2});
    const auto W = qring({3});
    EXPECT_THROW(V.add(V.one(), W.one()), grt::mismatch_error);
    EXPECT_THROW(V.mul(V.one(), W.one()), grt::mismatch_error);
    EXPECT_THROW(V.basis(2), grt::index_error);
    EXPECT_THROW(V.from_coeffs(q({1, 2, 3})), grt::mismatch_error);
}

TEST(GroupRing, NestedDepthThreeAxioms) {
    const auto g = make_group({2});
    const auto V = grt::make_nested<3>(g, grt::ModRing(5));
    static_assert(grt::CommutativeRing<std::decay_t<decltype(V)>>);
    EXPECT_EQ(V.spec(), "Z2[Z2[Z2[zmod:5]]]");
    const auto report = grt::group_ring_axiom_suite(V, 100, 3);
    EXPECT_TRUE(report.pass());
    for (const auto& c : report.checks) EXPECT_EQ(c.failures, 0u) << c.axiom;
}

TEST(GroupRing, NestedMatchesProductGroup) {
    // (R Z2) Z3 and R (Z2 x Z3) multiply identically after re-indexing.
    const auto inner = GroupRing<grt::RationalRing>(make_group({2}), grt::RationalRing{});
    const GroupRing<GroupRing<grt::RationalRing>> outer(make_group({3}), inner);
    const auto flat = qring({3, 2});
    grt::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto a = outer.sample(rng), b = outer.sample(rng);
        auto flatten = [&](const auto& x) {
            std::vector<mpq_class> c;
            for (const auto& t : x.coeffs)
                for (const auto& v : t.coeffs) c.push_back(v);
            return flat.from_coeffs(c);
        };
        ASSERT_TRUE(flat.eq(flatten(outer.mul(a, b)), flat.mul(flatten(a), flatten(b))));
    }
}

TEST(GroupRing, AxiomSuiteAcrossRings) {
    const auto g = make_group({3, 2});
    EXPECT_TRUE(grt::group_ring_axiom_suite(GroupRing(g, grt::RationalRing{}), 100, 1).pass());
    EXPECT_TRUE(grt::group_ring_axiom_suite(GroupRing(g, grt::ModRing(6)), 100, 1).pass());
    EXPECT_TRUE(grt::group_ring_axiom_suite(GroupRing(g, grt::RealRing{}), 100, 1).pass());
    EXPECT_TRUE(grt::group_ring_axiom_suite(GroupRing(g, grt::ComplexRing{}), 100, 1).pass());
}
