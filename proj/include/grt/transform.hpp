#pragma once

/**
 * @file transform.hpp
 * @brief Fourier transform on finite abelian groups and what it buys.
 *
 * For G = Z_{n1} x ... x Z_{nk} the characters are indexed like elements:
 * chi_q(g) = prod_j exp(-2 pi i r_j q_j / n_j). The transform is a
 * multidimensional DFT over the mixed-radix layout. One-dimensional
 * transforms use iterative radix-2 for powers of two, mixed-radix
 * decimation in time for composite lengths, and Bluestein's chirp-z
 * algorithm for prime lengths above a small cutoff.
 *
 * Only real (f64) and complex (c64) coefficient rings are supported;
 * other rings raise unsupported_ring.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <type_traits>
#include <vector>

#include "grt/tower.hpp"

namespace grt {

using cplx = std::complex<double>;

/// Rings the transform (and everything built on it) accepts.
template <class R>
inline constexpr bool is_float_ring_v = std::is_same_v<R, RealRing> || std::is_same_v<R, ComplexRing>;

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n && !(n & (n - 1)); }

inline std::size_t smallest_prime_factor(std::size_t n) {
    if (n % 2 == 0) return 2;
    for (std::size_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return p;
    return n;
}

/// exp(sign * 2 pi i * num / den), reducing num first for accuracy.
inline cplx unit_root(int sign, std::size_t num, std::size_t den) {
    num %= den;
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

inline constexpr std::size_t naive_prime_cutoff = 32;

inline void fft_inplace(std::vector<cplx>& a, int sign);

inline void fft_radix2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cplx> roots(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) roots[k] = unit_root(sign, k, n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2, step = n / len;
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < half; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + half] * roots[k * step];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
    }
}

inline void dft_naive(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j) acc += a[j] * unit_root(sign, j * k, n);
        out[k] = acc;
    }
    a.swap(out);
}

/// Chirp-z: X_k = c_k sum_j (x_j c_j) conj(c_{k-j}) with c_j = exp(sign pi i j^2 / n).
inline void fft_bluestein(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cplx> chirp(n);
    for (std::size_t j = 0; j < n; ++j) chirp[j] = unit_root(sign, (j * j) % (2 * n), 2 * n);

    std::vector<cplx> u(m), v(m);
    for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * chirp[j];
    v[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) v[j] = v[m - j] = std::conj(chirp[j]);

    fft_radix2(u, -1);
    fft_radix2(v, -1);
    for (std::size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_radix2(u, +1);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = chirp[k] * u[k] * scale;
}

/// Decimation in time on n = p m with p the smallest prime factor.
inline void fft_mixed(std::vector<cplx>& a, int sign, std::size_t p) {
    const std::size_t n = a.size(), m = n / p;
    std::vector<std::vector<cplx>> sub(p, std::vector<cplx>(m));
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t j = 0; j < m; ++j) sub[r][j] = a[j * p + r];
    for (auto& s : sub) fft_inplace(s, sign);

    std::vector<cplx> column(p);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t r = 0; r < p; ++r) column[r] = sub[r][k] * unit_root(sign, r * k, n);
        fft_inplace(column, sign);
        for (std::size_t q = 0; q < p; ++q) a[k + m * q] = column[q];
    }
}

/// Unnormalized DFT with kernel exp(sign 2 pi i jk / n).
inline void fft_inplace(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (is_power_of_two(n)) return fft_radix2(a, sign);
    const std::size_t p = smallest_prime_factor(n);
    if (p == n) {
        if (n <= naive_prime_cutoff) return dft_naive(a, sign);
        return fft_bluestein(a, sign);
    }
    fft_mixed(a, sign, p);
}

/// Applies the 1-D transform along every cyclic factor of the mixed-radix layout.
inline void transform_axes(const FiniteAbelianGroup& g, std::vector<cplx>& data, int sign) {
    const std::size_t total = g.order();
    std::vector<cplx> line;
    for (std::size_t axis = 0; axis < g.rank(); ++axis) {
        const std::size_t len = g.factors()[axis], stride = g.stride(axis), block = len * stride;
        if (len == 1) continue;
        line.resize(len);
        for (std::size_t base = 0; base < total; base += block)
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t j = 0; j < len; ++j) line[j] = data[base + off + j * stride];
                fft_inplace(line, sign);
                for (std::size_t j = 0; j < len; ++j) data[base + off + j * stride] = line[j];
            }
    }
}

template <class R>
void require_float_ring() {
    if constexpr (!is_float_ring_v<R>)
        throw unsupported_ring("group Fourier transform needs a real or complex coefficient ring (use f64 or c64)");
}

template <class R>
typename R::value_type from_complex(const cplx& z) {
    if constexpr (std::is_same_v<R, RealRing>) {
        return z.real();
    } else {
        return z;
    }
}

}  // namespace detail

struct GroupSpectrum {
    FiniteAbelianGroup group;
    std::vector<cplx> values;
};

/// Forward transform a^(chi) = sum_g a_g chi(g).
template <CommutativeRing R>
GroupSpectrum gft_forward(const GroupRing<R>& V, const GroupRingElement<typename R::value_type>& a) {
    detail::require_float_ring<R>();
    V.check(a);
    GroupSpectrum s{V.group(), {}};
    if constexpr (is_float_ring_v<R>) {
        s.values.assign(a.coeffs.begin(), a.coeffs.end());
        detail::transform_axes(V.group(), s.values, -1);
    }
    return s;
}

/// Inverse transform with 1/n normalization; real rings keep the real part.
template <CommutativeRing R>
GroupRingElement<typename R::value_type> gft_inverse(const GroupRing<R>& V, const GroupSpectrum& s) {
    detail::require_float_ring<R>();
    if (!(s.group == V.group()) || s.values.size() != V.order())
        throw mismatch_error("spectrum does not belong to group " + V.group().spec());
    auto out = V.zero();
    if constexpr (is_float_ring_v<R>) {
        std::vector<cplx> data = s.values;
        detail::transform_axes(V.group(), data, +1);
        const double scale = 1.0 / static_cast<double>(V.order());
        for (std::size_t i = 0; i < data.size(); ++i) out.coeffs[i] = detail::from_complex<R>(data[i] * scale);
    }
    return out;
}

/// Convolution through pointwise multiplication of spectra.
template <CommutativeRing R>
GroupRingElement<typename R::value_type> gr_convolve_fast(const GroupRing<R>& V,
                                                          const GroupRingElement<typename R::value_type>& a,
                                                          const GroupRingElement<typename R::value_type>& b) {
    detail::require_float_ring<R>();
    GroupSpectrum sa = gft_forward(V, a);
    const GroupSpectrum sb = gft_forward(V, b);
    for (std::size_t i = 0; i < sa.values.size(); ++i) sa.values[i] *= sb.values[i];
    return gft_inverse(V, sa);
}

inline constexpr double condition_limit = 1e12;

namespace detail {

using CMatrix = std::vector<cplx>;  // row-major n x n

inline double norm1(const CMatrix& a, std::size_t n) {
    double best = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += std::abs(a[r * n + c]);
        best = std::max(best, s);
    }
    return best;
}

/// Gauss-Jordan with partial pivoting. Returns false on a zero pivot or a
/// 1-norm condition number at or above condition_limit.
inline bool invert_slice(CMatrix a, std::size_t n, CMatrix& inv) {
    const double anorm = norm1(a, n);
    inv.assign(n * n, cplx{});
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) == 0.0) return false;
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[piv * n + c], a[col * n + c]);
                std::swap(inv[piv * n + c], inv[col * n + c]);
            }
        const cplx d = 1.0 / a[col * n + col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col * n + c] *= d;
            inv[col * n + c] *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = a[r * n + col];
            if (f == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
                inv[r * n + c] -= f * inv[col * n + c];
            }
        }
    }
    const double cond = anorm * norm1(inv, n);
    return std::isfinite(cond) && cond < condition_limit;
}

}  // namespace detail

/**
 * Inverse of X in T = MG: transform along the group mode, invert each
 * n x n character slice, transform back. Throws not_invertible naming the
 * first character whose slice is singular or has 1-norm condition number
 * >= 1e12.
 */
template <CommutativeRing R>
Tensor<typename R::value_type> tensor_t_inverse(const Tower<R>& tw, const Tensor<typename R::value_type>& x) {
    detail::require_float_ring<R>();
    tw.check(x);
    auto out = tw.zero_tensor();
    if constexpr (is_float_ring_v<R>) {
        const std::size_t n = tw.n();
        const auto& group = tw.group();
        // hat[chi] is the transform-domain slice for character chi.
        std::vector<detail::CMatrix> hat(n, detail::CMatrix(n * n));
        std::vector<cplx> tube(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t g = 0; g < n; ++g) tube[g] = x[g](i, j);
                detail::transform_axes(group, tube, -1);
                for (std::size_t chi = 0; chi < n; ++chi) hat[chi][i * n + j] = tube[chi];
            }
        std::vector<detail::CMatrix> inv(n);
        for (std::size_t chi = 0; chi < n; ++chi)
            if (!detail::invert_slice(hat[chi], n, inv[chi]))
                throw not_invertible(chi, "transform-domain slice for character " + std::to_string(chi) +
                                              " is singular or ill-conditioned");
        const double scale = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t chi = 0; chi < n; ++chi) tube[chi] = inv[chi][i * n + j];
                detail::transform_axes(group, tube, +1);
                for (std::size_t g = 0; g < n; ++g) out[g](i, j) = detail::from_complex<R>(tube[g] * scale);
            }
    }
    return out;
}

}  // namespace grt
