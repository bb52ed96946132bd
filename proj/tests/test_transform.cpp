#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grt/grt.hpp"

using grt::cplx;
using grt::GroupRing;
using grt::make_group;

namespace {

// Direct character sum: a^(chi) = sum_g a_g prod_i exp(-2 pi i chi_i g_i / m_i).
std::vector<cplx> dft_oracle(const grt::FiniteAbelianGroup& g, const std::vector<double>& a) {
    std::vector<cplx> out(g.order());
    for (std::size_t c = 0; c < g.order(); ++c) {
        const auto chi = g.elem(c);
        for (std::size_t x = 0; x < g.order(); ++x) {
            const auto e = g.elem(x);
            double phase = 0.0;
            for (std::size_t i = 0; i < g.rank(); ++i)
                phase += static_cast<double>(chi.residues[i] * e.residues[i] % g.factors()[i]) /
                         static_cast<double>(g.factors()[i]);
            out[c] += a[x] * std::polar(1.0, -2.0 * std::numbers::pi * phase);
        }
    }
    return out;
}

double max_gap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST(Transform, Examples) {
    GroupRing<grt::RealRing> z4(make_group({4}), grt::RealRing{});
    const auto s = grt::gft_forward(z4, z4.one());
    for (const auto& v : s.values) EXPECT_NEAR(std::abs(v - cplx(1.0)), 0.0, 1e-12);
    GroupRing<grt::RealRing> z2(make_group({2}), grt::RealRing{});
    const auto t = grt::gft_forward(z2, z2.from_coeffs({1.0, 1.0}));
    EXPECT_NEAR(std::abs(t.values[0] - cplx(2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.values[1]), 0.0, 1e-12);
}

TEST(Transform, ForwardMatchesCharacterSum) {
    for (auto factors : std::vector<std::vector<long long>>{
             {1}, {2}, {5}, {8}, {12}, {17}, {37}, {45}, {4, 2}, {3, 6}, {2, 2, 2}, {5, 7}, {41, 2}}) {
        const auto g = make_group(std::vector<long long>(factors));
        GroupRing<grt::RealRing> V(g, grt::RealRing{});
        grt::Rng rng(g.order());
        const auto a = V.sample(rng);
        EXPECT_LE(max_gap(grt::gft_forward(V, a).values, dft_oracle(g, a.coeffs)), 1e-9) << g.spec();
    }
}

TEST(Transform, FastMatchesNaive) {
    for (long long n : {1, 2, 3, 12, 17, 31, 33, 64, 97, 100, 256}) {
        GroupRing<grt::RealRing> V(make_group({n}), grt::RealRing{});
        grt::Rng rng(static_cast<std::uint64_t>(n));
        const auto a = V.sample(rng), b = V.sample(rng);
        EXPECT_LE(V.residual(V.mul(a, b), grt::gr_convolve_fast(V, a, b)), 1e-9) << n;
        EXPECT_TRUE(V.eq(grt::gr_convolve_fast(V, a, V.one()), a));
    }
    GroupRing<grt::ComplexRing> W(make_group({3, 4}), grt::ComplexRing{});
    grt::Rng rng(7);
    const auto a = W.sample(rng), b = W.sample(rng);
    EXPECT_LE(W.residual(W.mul(a, b), grt::gr_convolve_fast(W, a, b)), 1e-9);
}

TEST(Transform, DeltaShiftsCompose) {
    GroupRing<grt::RealRing> V(make_group({8}), grt::RealRing{});
    EXPECT_TRUE(V.eq(grt::gr_convolve_fast(V, V.basis(3), V.basis(6)), V.basis(1)));
}

TEST(Transform, RoundTrip) {
    GroupRing<grt::ComplexRing> V(make_group({6, 2}), grt::ComplexRing{});
    grt::Rng rng(3);
    const auto a = V.sample(rng);
    EXPECT_TRUE(V.eq(grt::gft_inverse(V, grt::gft_forward(V, a)), a));
}

TEST(Transform, ExactRingsAreUnsupported) {
    GroupRing<grt::RationalRing> V(make_group({4}), grt::RationalRing{});
    EXPECT_THROW(grt::gft_forward(V, V.one()), grt::unsupported_ring);
    EXPECT_THROW(grt::gr_convolve_fast(V, V.one(), V.one()), grt::unsupported_ring);
    const grt::Tower<grt::RationalRing> tw(make_group({2}), grt::RationalRing{});
    EXPECT_THROW(grt::tensor_t_inverse(tw, tw.identity_tensor()), grt::unsupported_ring);
}

TEST(Transform, TInverse) {
    const grt::Tower<grt::RealRing> tw(make_group({3}), grt::RealRing{});
    EXPECT_LE(tw.residual(grt::tensor_t_inverse(tw, tw.identity_tensor()), tw.identity_tensor()), 1e-12);

    auto two = tw.zero_tensor();
    for (std::size_t i = 0; i < tw.n(); ++i) two[0](i, i) = 2.0;
    const auto half = grt::tensor_t_inverse(tw, two);
    for (std::size_t i = 0; i < tw.n(); ++i) EXPECT_NEAR(half[0](i, i), 0.5, 1e-12);
    EXPECT_TRUE(tw.is_zero(half[1]));

    grt::Rng rng(4);
    const auto x = tw.sample_tensor(rng);
    EXPECT_LE(tw.residual(tw.tensor_tensor_product(x, grt::tensor_t_inverse(tw, x)), tw.identity_tensor()), 1e-8);
}

TEST(Transform, TInverseReportsCharacter) {
    const grt::Tower<grt::RealRing> tw(make_group({2}), grt::RealRing{});
    // X_0 = X_1 = I: the character with chi(1) = -1 sees X_0 - X_1 = 0.
    auto x = tw.zero_tensor();
    x[0] = tw.identity_matrix();
    x[1] = tw.identity_matrix();
    try {
        grt::tensor_t_inverse(tw, x);
        FAIL() << "expected not_invertible";
    } catch (const grt::not_invertible& e) {
        EXPECT_EQ(e.character(), 1u);
    }
}

TEST(Transform, SuitePasses) {
    const grt::Tower<grt::RealRing> tw(make_group({3, 2}), grt::RealRing{});
    EXPECT_TRUE(grt::transform_suite(tw, 40, 1).pass());
    const grt::Tower<grt::RationalRing> tq(make_group({3}), grt::RationalRing{});
    const auto skipped = grt::transform_suite(tq, 40, 1);
    EXPECT_TRUE(skipped.skipped);
    EXPECT_TRUE(skipped.pass());
}
