#pragma once

/**
 * @file rings.hpp
 * @brief Commutative coefficient rings with identity.
 *
 * A ring is a small immutable context object exposing the operations on its
 * `value_type`. Values are plain value types. Exact backends compare
 * exactly; approximate backends compare with a relative tolerance
 * |x - y| <= tol * max(1, |x|, |y|).
 *
 * GroupRing<R> (group_ring.hpp) satisfies the same concept, which is how
 * nested, higher-order tensor rings are built.
 */

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "grt/errors.hpp"
#include "grt/random.hpp"

namespace grt {

template <class R>
concept CommutativeRing = requires(const R& r, typename R::value_type& acc,
                                   const typename R::value_type& a,
                                   const typename R::value_type& b, Rng& rng) {
    typename R::value_type;
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
    r.mul_add(acc, a, b);
    { r.eq(a, b) } -> std::same_as<bool>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.residual(a, b) } -> std::convertible_to<double>;
    { r.sample(rng) } -> std::convertible_to<typename R::value_type>;
    { r.spec() } -> std::convertible_to<std::string>;
    { r.to_string(a) } -> std::convertible_to<std::string>;
};

template <class R>
inline constexpr bool is_approximate_v = false;

// ---------------------------------------------------------------------------

/// Exact rationals backed by GMP.
class RationalRing {
public:
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    void mul_add(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    double residual(const value_type& a, const value_type& b) const {
        return a == b ? 0.0 : std::fabs(mpq_class(a - b).get_d());
    }

    /// Small fractions p/q with |p| <= 9, 1 <= q <= 6.
    value_type sample(Rng& rng) const {
        value_type v(rng.between(-9, 9), rng.between(1, 6));
        v.canonicalize();
        return v;
    }

    std::string spec() const { return "q"; }
    std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// Integers modulo m (m >= 2, not necessarily prime).
class ModRing {
public:
    using value_type = std::uint64_t;

    // m <= 2^62 keeps a + b from overflowing.
    explicit ModRing(std::uint64_t modulus) : m_(modulus) {
        if (modulus < 2) throw invalid_ring_spec("zmod modulus must be >= 2");
        if (modulus > (std::uint64_t{1} << 62)) throw invalid_ring_spec("zmod modulus too large");
    }

    std::uint64_t modulus() const noexcept { return m_; }
    value_type from_int(std::int64_t v) const {
        auto r = v % static_cast<std::int64_t>(m_);
        return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= m_ ? s - m_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (m_ - b); }
    value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % m_);
    }
    void mul_add(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
    bool eq(value_type a, value_type b) const { return a == b; }
    bool is_zero(value_type a) const { return a == 0; }
    double residual(value_type a, value_type b) const { return a == b ? 0.0 : 1.0; }
    value_type sample(Rng& rng) const { return rng.below(m_); }

    std::string spec() const { return "zmod:" + std::to_string(m_); }
    std::string to_string(value_type a) const { return std::to_string(a); }

private:
    std::uint64_t m_;
};

inline constexpr double default_tolerance = 1e-9;

namespace detail {
inline double relative_gap(double gap, double x, double y) {
    return gap / std::max({1.0, x, y});
}
}  // namespace detail

/// IEEE binary64 with tolerance equality.
class RealRing {
public:
    using value_type = double;

    explicit RealRing(double tol = default_tolerance) : tol_(tol) {
        if (!(tol >= 0)) throw invalid_ring_spec("tolerance must be non-negative");
    }
    double tolerance() const noexcept { return tol_; }

    value_type zero() const { return 0.0; }
    value_type one() const { return 1.0; }
    value_type add(double a, double b) const { return a + b; }
    value_type sub(double a, double b) const { return a - b; }
    value_type neg(double a) const { return -a; }
    value_type mul(double a, double b) const { return a * b; }
    void mul_add(double& acc, double a, double b) const { acc += a * b; }
    bool eq(double a, double b) const { return residual(a, b) <= tol_; }
    bool is_zero(double a) const { return eq(a, 0.0); }
    double residual(double a, double b) const {
        return detail::relative_gap(std::fabs(a - b), std::fabs(a), std::fabs(b));
    }
    value_type sample(Rng& rng) const { return rng.uniform(-1.0, 1.0); }

    std::string spec() const { return "f64"; }
    std::string to_string(double a) const {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, a);
        return std::string(buf, res.ptr);
    }

private:
    double tol_;
};

/// Pairs of binary64 with tolerance equality on the modulus.
class ComplexRing {
public:
    using value_type = std::complex<double>;

    explicit ComplexRing(double tol = default_tolerance) : tol_(tol) {
        if (!(tol >= 0)) throw invalid_ring_spec("tolerance must be non-negative");
    }
    double tolerance() const noexcept { return tol_; }

    value_type zero() const { return {}; }
    value_type one() const { return {1.0, 0.0}; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    void mul_add(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
    bool eq(const value_type& a, const value_type& b) const { return residual(a, b) <= tol_; }
    bool is_zero(const value_type& a) const { return eq(a, value_type{}); }
    double residual(const value_type& a, const value_type& b) const {
        return detail::relative_gap(std::abs(a - b), std::abs(a), std::abs(b));
    }
    value_type sample(Rng& rng) const {
        double re = rng.uniform(-1.0, 1.0);
        double im = rng.uniform(-1.0, 1.0);
        return {re, im};
    }

    std::string spec() const { return "c64"; }
    std::string to_string(const value_type& a) const {
        RealRing r;
        return "(" + r.to_string(a.real()) + "," + r.to_string(a.imag()) + ")";
    }

private:
    double tol_;
};

template <>
inline constexpr bool is_approximate_v<RealRing> = true;
template <>
inline constexpr bool is_approximate_v<ComplexRing> = true;

static_assert(CommutativeRing<RationalRing>);
static_assert(CommutativeRing<ModRing>);
static_assert(CommutativeRing<RealRing>);
static_assert(CommutativeRing<ComplexRing>);

// ---------------------------------------------------------------------------
// Runtime selection from a spec string.

using AnyRing = std::variant<RationalRing, ModRing, RealRing, ComplexRing>;

/// Parses `q`, `zmod:<m>`, `f64` or `c64`.
inline AnyRing make_ring(std::string_view spec, double tol = default_tolerance) {
    if (!(tol >= 0)) throw invalid_ring_spec("tolerance must be non-negative");
    if (spec == "q") return RationalRing{};
    if (spec == "f64") return RealRing{tol};
    if (spec == "c64") return ComplexRing{tol};
    constexpr std::string_view prefix = "zmod:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto digits = spec.substr(prefix.size());
        std::uint64_t m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw invalid_ring_spec("invalid modulus in ring spec '" + std::string(spec) + "'");
        if (m < 2) throw invalid_ring_spec("zmod modulus must be >= 2");
        if (m > (std::uint64_t{1} << 62)) throw invalid_ring_spec("zmod modulus too large");
        return ModRing{m};
    }
    throw invalid_ring_spec("unknown ring spec '" + std::string(spec) + "'");
}

inline std::string ring_spec(const AnyRing& r) {
    return std::visit([](const auto& ring) { return ring.spec(); }, r);
}

}  // namespace grt
