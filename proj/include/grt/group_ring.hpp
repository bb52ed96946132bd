#pragma once

/**
 * @file group_ring.hpp
 * @brief The group ring RG of a finite abelian group G over a commutative ring R.
 *
 * An element is the formal sum sum_g a_g |g>, stored densely with a_g at the
 * canonical index of g. Addition is componentwise and multiplication is the
 * group convolution c_k = sum_{gh=k} a_g b_h.
 *
 * GroupRing<R> is itself a CommutativeRing, so GroupRing<GroupRing<R>> and
 * deeper nestings are commutative rings of higher-order tensors with no
 * extra code.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grt/group.hpp"
#include "grt/rings.hpp"

namespace grt {

template <class T>
struct GroupRingElement {
    std::vector<T> coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    T& operator[](std::size_t i) { return coeffs[i]; }
    const T& operator[](std::size_t i) const { return coeffs[i]; }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

template <CommutativeRing R>
class GroupRing {
public:
    using coeff_ring_type = R;
    using coeff_type = typename R::value_type;
    using value_type = GroupRingElement<coeff_type>;

    GroupRing(FiniteAbelianGroup group, R ring) : group_(std::move(group)), ring_(std::move(ring)) {}

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const R& coeff_ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return group_.order(); }

    value_type zero() const { return value_type{std::vector<coeff_type>(order(), ring_.zero())}; }

    /// 1_R |1_G>.
    value_type one() const { return embed(ring_.one()); }

    /// r |1_G>.
    value_type embed(const coeff_type& r) const {
        value_type out = zero();
        out.coeffs[0] = r;
        return out;
    }

    /// 1_R |g>.
    value_type basis(std::size_t g) const {
        if (g >= order()) throw index_error("basis index out of range");
        value_type out = zero();
        out.coeffs[g] = ring_.one();
        return out;
    }
    value_type basis(const GroupElement& g) const { return basis(group_.index(g)); }

    value_type from_coeffs(std::vector<coeff_type> coeffs) const {
        if (coeffs.size() != order())
            throw mismatch_error("expected " + std::to_string(order()) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
        return value_type{std::move(coeffs)};
    }

    value_type add(const value_type& a, const value_type& b) const {
        check(a, b);
        value_type out = a;
        for (std::size_t i = 0; i < order(); ++i) out.coeffs[i] = ring_.add(a.coeffs[i], b.coeffs[i]);
        return out;
    }

    value_type sub(const value_type& a, const value_type& b) const {
        check(a, b);
        value_type out = a;
        for (std::size_t i = 0; i < order(); ++i) out.coeffs[i] = ring_.sub(a.coeffs[i], b.coeffs[i]);
        return out;
    }

    value_type neg(const value_type& a) const {
        check(a);
        value_type out = a;
        for (auto& c : out.coeffs) c = ring_.neg(c);
        return out;
    }

    /// Convolution by the direct double loop over all |G|^2 pairs.
    value_type mul(const value_type& a, const value_type& b) const {
        check(a, b);
        value_type out = zero();
        const std::size_t n = order();
        for (std::size_t g = 0; g < n; ++g) {
            if (skippable(a.coeffs[g])) continue;
            for (std::size_t h = 0; h < n; ++h)
                ring_.mul_add(out.coeffs[group_.compose_index(g, h)], a.coeffs[g], b.coeffs[h]);
        }
        return out;
    }

    void mul_add(value_type& acc, const value_type& a, const value_type& b) const {
        check(acc);
        check(a, b);
        const std::size_t n = order();
        for (std::size_t g = 0; g < n; ++g) {
            if (skippable(a.coeffs[g])) continue;
            for (std::size_t h = 0; h < n; ++h)
                ring_.mul_add(acc.coeffs[group_.compose_index(g, h)], a.coeffs[g], b.coeffs[h]);
        }
    }

    /// r * a, scaling every coefficient (equals embed(r) * a).
    value_type scale(const coeff_type& r, const value_type& a) const {
        check(a);
        value_type out = a;
        for (auto& c : out.coeffs) c = ring_.mul(r, c);
        return out;
    }

    /// The anti-involution sum_g a_g |g> -> sum_g a_g |g^{-1}>.
    value_type anti_involution(const value_type& a) const {
        check(a);
        value_type out = a;
        for (std::size_t g = 0; g < order(); ++g) out.coeffs[group_.inverse_index(g)] = a.coeffs[g];
        return out;
    }

    bool eq(const value_type& a, const value_type& b) const {
        check(a, b);
        for (std::size_t i = 0; i < order(); ++i)
            if (!ring_.eq(a.coeffs[i], b.coeffs[i])) return false;
        return true;
    }

    bool is_zero(const value_type& a) const {
        check(a);
        for (const auto& c : a.coeffs)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    /// Largest coefficient residual.
    double residual(const value_type& a, const value_type& b) const {
        check(a, b);
        double r = 0.0;
        for (std::size_t i = 0; i < order(); ++i) r = std::max(r, ring_.residual(a.coeffs[i], b.coeffs[i]));
        return r;
    }

    value_type sample(Rng& rng) const {
        value_type out;
        out.coeffs.reserve(order());
        for (std::size_t i = 0; i < order(); ++i) out.coeffs.push_back(ring_.sample(rng));
        return out;
    }

    /// e.g. "Z2[Z2[q]]" for nested instances; the outer group comes first.
    std::string spec() const { return group_.spec() + "[" + ring_.spec() + "]"; }

    std::string to_string(const value_type& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (i) s += ", ";
            s += ring_.to_string(a.coeffs[i]);
        }
        return s + ")";
    }

    /// Throws mismatch_error unless `a` has this ring's shape.
    void check(const value_type& a) const {
        if (a.coeffs.size() != order())
            throw mismatch_error("group ring element has " + std::to_string(a.coeffs.size()) +
                                 " coefficients, expected " + std::to_string(order()));
    }

private:
    // Exact zeros only; tolerance-zero coefficients still contribute.
    bool skippable(const coeff_type& c) const {
        if constexpr (is_approximate_v<R>) {
            (void)c;
            return false;
        } else {
            return ring_.is_zero(c);
        }
    }

    void check(const value_type& a, const value_type& b) const {
        check(a);
        check(b);
    }

    FiniteAbelianGroup group_;
    R ring_;
};

template <CommutativeRing R>
inline constexpr bool is_approximate_v<GroupRing<R>> = is_approximate_v<R>;

static_assert(CommutativeRing<GroupRing<RationalRing>>);
static_assert(CommutativeRing<GroupRing<GroupRing<ModRing>>>);

/// Nests `depth` copies of G around R: depth 1 is RG, depth 2 is (RG)G, ...
template <std::size_t Depth, CommutativeRing R>
auto make_nested(const FiniteAbelianGroup& group, R ring) {
    if constexpr (Depth == 0) {
        return ring;
    } else {
        return GroupRing(group, make_nested<Depth - 1>(group, std::move(ring)));
    }
}

}  // namespace grt
