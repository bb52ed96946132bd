#pragma once

/**
 * @file diag.hpp
 * @brief Diagonal tensors, lateral slices, tubes, and the eigen-equation check.
 *
 * If T * X = X * L with L diagonal, then for every k the lateral slice X^(k)
 * (column g = column k of X_g) satisfies T * X^(k) = L_kk o X^(k), where the
 * tube L_kk has coefficient d(g, k) at g.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grt/transform.hpp"

namespace grt {

template <class T>
struct DiagonalTensor {
    std::size_t n = 0;
    /// d(g, k) stored at g * n + k: entry (k, k) of slice L_g.
    std::vector<T> d;

    T& operator()(std::size_t g, std::size_t k) { return d[g * n + k]; }
    const T& operator()(std::size_t g, std::size_t k) const { return d[g * n + k]; }
};

template <CommutativeRing R>
void check_diagonal(const Tower<R>& tw, const DiagonalTensor<typename R::value_type>& l) {
    if (l.n != tw.n() || l.d.size() != tw.n() * tw.n())
        throw mismatch_error("diagonal tensor does not match group order " + std::to_string(tw.n()));
}

template <CommutativeRing R>
Tensor<typename R::value_type> to_tensor(const Tower<R>& tw, const DiagonalTensor<typename R::value_type>& l) {
    check_diagonal(tw, l);
    auto t = tw.zero_tensor();
    for (std::size_t g = 0; g < tw.n(); ++g)
        for (std::size_t k = 0; k < tw.n(); ++k) t[g](k, k) = l(g, k);
    return t;
}

template <CommutativeRing R>
DiagonalTensor<typename R::value_type> identity_diagonal(const Tower<R>& tw) {
    DiagonalTensor<typename R::value_type> l{tw.n(), std::vector<typename R::value_type>(tw.n() * tw.n(), tw.ring().zero())};
    for (std::size_t k = 0; k < tw.n(); ++k) l(0, k) = tw.ring().one();
    return l;
}

template <CommutativeRing R>
DiagonalTensor<typename R::value_type> sample_diagonal(const Tower<R>& tw, Rng& rng) {
    DiagonalTensor<typename R::value_type> l{tw.n(), {}};
    l.d.reserve(tw.n() * tw.n());
    for (std::size_t i = 0; i < tw.n() * tw.n(); ++i) l.d.push_back(tw.ring().sample(rng));
    return l;
}

/// True when every slice has zero off-diagonal entries.
template <CommutativeRing R>
bool is_diagonal(const Tower<R>& tw, const Tensor<typename R::value_type>& t) {
    tw.check(t);
    for (const auto& s : t.slices)
        for (std::size_t i = 0; i < tw.n(); ++i)
            for (std::size_t j = 0; j < tw.n(); ++j)
                if (i != j && !tw.ring().is_zero(s(i, j))) return false;
    return true;
}

/// X^(k): column g is column k of slice X_g.
template <CommutativeRing R>
Matrix<typename R::value_type> lateral_slice(const Tower<R>& tw, const Tensor<typename R::value_type>& x,
                                             std::size_t k) {
    tw.check(x);
    tw.check_index(k);
    auto out = tw.zero_matrix();
    for (std::size_t g = 0; g < tw.n(); ++g)
        for (std::size_t j = 0; j < tw.n(); ++j) out(j, g) = x[g](j, k);
    return out;
}

template <CommutativeRing R>
Matrix<typename R::value_type> lateral_slice(const Tower<R>& tw, const Tensor<typename R::value_type>& x,
                                             const GroupElement& k) {
    return lateral_slice(tw, x, tw.group().index(k));
}

/// L_kk = sum_g d(g, k) |g>.
template <CommutativeRing R>
GroupRingElement<typename R::value_type> tube(const Tower<R>& tw, const DiagonalTensor<typename R::value_type>& l,
                                              std::size_t k) {
    check_diagonal(tw, l);
    tw.check_index(k);
    auto v = tw.vectors().zero();
    for (std::size_t g = 0; g < tw.n(); ++g) v.coeffs[g] = l(g, k);
    return v;
}

template <CommutativeRing R>
GroupRingElement<typename R::value_type> tube(const Tower<R>& tw, const DiagonalTensor<typename R::value_type>& l,
                                              const GroupElement& k) {
    return tube(tw, l, tw.group().index(k));
}

inline constexpr double hypothesis_tolerance = 1e-8;
inline constexpr double eigen_tolerance = 1e-7;

struct EigenCheck {
    std::size_t k = 0;
    double hypothesis_residual = 0.0;
    double eigen_residual = 0.0;
    bool pass = false;
};

struct DiagReport {
    bool hypothesis_holds = false;
    double hypothesis_residual = 0.0;
    std::vector<EigenCheck> per_k;

    bool conclusion_holds() const {
        for (const auto& c : per_k)
            if (!c.pass) return false;
        return !per_k.empty();
    }
    bool pass() const { return hypothesis_holds && conclusion_holds(); }
};

/**
 * Checks T * X = X * L, then T * X^(k) = L_kk o X^(k) for every k. The
 * conclusion is evaluated even when the hypothesis fails. Approximate rings
 * compare residuals against the tolerances; exact rings compare exactly.
 */
template <CommutativeRing R>
DiagReport verify_diagonalization(const Tower<R>& tw, const Tensor<typename R::value_type>& t,
                                  const Tensor<typename R::value_type>& x,
                                  const DiagonalTensor<typename R::value_type>& l,
                                  double hyp_tol = hypothesis_tolerance, double eig_tol = eigen_tolerance) {
    tw.check(t);
    tw.check(x);
    const auto lt = to_tensor(tw, l);
    const auto lhs = tw.tensor_tensor_product(t, x);
    const auto rhs = tw.tensor_tensor_product(x, lt);

    auto within = [&](const auto& a, const auto& b, double res, double tol) {
        if constexpr (is_approximate_v<R>) {
            (void)a;
            (void)b;
            return res <= tol;
        } else {
            (void)res;
            (void)tol;
            return tw.eq(a, b);
        }
    };

    DiagReport report;
    report.hypothesis_residual = tw.residual(lhs, rhs);
    report.hypothesis_holds = within(lhs, rhs, report.hypothesis_residual, hyp_tol);
    for (std::size_t k = 0; k < tw.n(); ++k) {
        const auto xk = lateral_slice(tw, x, k);
        const auto left = tw.tensor_matrix_product(t, xk);
        const auto right = tw.scalar_product(tube(tw, l, k), xk);
        EigenCheck c;
        c.k = k;
        c.hypothesis_residual = report.hypothesis_residual;
        c.eigen_residual = tw.residual(left, right);
        c.pass = within(left, right, c.eigen_residual, eig_tol);
        report.per_k.push_back(c);
    }
    return report;
}

template <class T>
struct DiagInstance {
    Tensor<T> t;
    Tensor<T> x;
    DiagonalTensor<T> l;
};

inline constexpr std::size_t max_generation_draws = 16;

/**
 * Draws random X until it is t-invertible, then sets T = (X * L) * X^{-1}
 * so that T * X = X * L holds by construction.
 */
template <CommutativeRing R>
DiagInstance<typename R::value_type> generate_diag_instance(const Tower<R>& tw,
                                                            DiagonalTensor<typename R::value_type> l,
                                                            Rng& rng) {
    detail::require_float_ring<R>();
    check_diagonal(tw, l);
    const auto lt = to_tensor(tw, l);
    for (std::size_t draw = 0; draw < max_generation_draws; ++draw) {
        auto x = tw.sample_tensor(rng);
        Tensor<typename R::value_type> xinv;
        try {
            xinv = tensor_t_inverse(tw, x);
        } catch (const not_invertible&) {
            continue;
        }
        auto t = tw.tensor_tensor_product(tw.tensor_tensor_product(x, lt), xinv);
        if (tw.residual(tw.tensor_tensor_product(t, x), tw.tensor_tensor_product(x, lt)) > hypothesis_tolerance)
            continue;
        return {std::move(t), std::move(x), std::move(l)};
    }
    throw generation_failed("no t-invertible X found in " + std::to_string(max_generation_draws) + " draws");
}

/// Random diagonal L followed by the conjugation above, all from one seed.
template <CommutativeRing R>
DiagInstance<typename R::value_type> generate_diag_instance(const Tower<R>& tw, std::uint64_t seed) {
    detail::require_float_ring<R>();
    Rng rng(seed);
    auto l = sample_diagonal(tw, rng);
    return generate_diag_instance(tw, std::move(l), rng);
}

}  // namespace grt
