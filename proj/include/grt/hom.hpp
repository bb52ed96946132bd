#pragma once

/**
 * @file hom.hpp
 * @brief Conversion between tensors in T and V-module endomorphisms of M.
 *
 * A homomorphism L is stored by its action on the transposed basis:
 * L(B_h) = sum_g alpha(g, h) o B_g. The tensor with slices
 * T_k(g, h) = (alpha(g, h))_k acts on M exactly as L does.
 */

#include <cstddef>
#include <vector>

#include "grt/module.hpp"

namespace grt {

template <class T>
struct ModuleHom {
    std::size_t n = 0;
    /// alpha(g, h) stored at g * n + h.
    std::vector<GroupRingElement<T>> alpha;

    GroupRingElement<T>& operator()(std::size_t g, std::size_t h) { return alpha[g * n + h]; }
    const GroupRingElement<T>& operator()(std::size_t g, std::size_t h) const { return alpha[g * n + h]; }

    friend bool operator==(const ModuleHom&, const ModuleHom&) = default;
};

template <CommutativeRing R>
void check_hom(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l) {
    if (l.n != tw.n() || l.alpha.size() != tw.n() * tw.n())
        throw mismatch_error("homomorphism table does not match group order " + std::to_string(tw.n()));
    for (const auto& a : l.alpha) tw.vectors().check(a);
}

template <CommutativeRing R>
ModuleHom<typename R::value_type> identity_hom(const Tower<R>& tw) {
    ModuleHom<typename R::value_type> l{tw.n(), {}};
    l.alpha.assign(tw.n() * tw.n(), tw.vectors().zero());
    for (std::size_t g = 0; g < tw.n(); ++g) l(g, g) = tw.vectors().one();
    return l;
}

template <CommutativeRing R>
ModuleHom<typename R::value_type> sample_hom(const Tower<R>& tw, Rng& rng) {
    ModuleHom<typename R::value_type> l{tw.n(), {}};
    l.alpha.reserve(tw.n() * tw.n());
    for (std::size_t i = 0; i < tw.n() * tw.n(); ++i) l.alpha.push_back(tw.vectors().sample(rng));
    return l;
}

/// L(B_h) = sum_g alpha(g, h) o B_g.
template <CommutativeRing R>
Matrix<typename R::value_type> hom_on_basis(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l,
                                            std::size_t h) {
    check_hom(tw, l);
    tw.check_index(h);
    CoordinateVector<typename R::value_type> coords;
    coords.reserve(tw.n());
    for (std::size_t g = 0; g < tw.n(); ++g) coords.push_back(l(g, h));
    return reconstruct(tw, coords);
}

/// L(A) = sum_h a_h o L(B_h) where a = decompose(A).
template <CommutativeRing R>
Matrix<typename R::value_type> hom_apply(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l,
                                         const Matrix<typename R::value_type>& a) {
    check_hom(tw, l);
    const auto coords = decompose(tw, a);
    auto out = tw.zero_matrix();
    for (std::size_t h = 0; h < tw.n(); ++h)
        out = tw.add(out, tw.scalar_product(coords[h], hom_on_basis(tw, l, h)));
    return out;
}

/// Slice k has entry (j, h) = (alpha(j, h))_k.
template <CommutativeRing R>
Tensor<typename R::value_type> tensor_from_hom(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l) {
    check_hom(tw, l);
    auto t = tw.zero_tensor();
    for (std::size_t k = 0; k < tw.n(); ++k)
        for (std::size_t j = 0; j < tw.n(); ++j)
            for (std::size_t h = 0; h < tw.n(); ++h) t[k](j, h) = l(j, h).coeffs[k];
    return t;
}

/// Inverse of tensor_from_hom: (alpha(g, h))_k = entry (g, h) of T_k.
template <CommutativeRing R>
ModuleHom<typename R::value_type> hom_from_tensor(const Tower<R>& tw, const Tensor<typename R::value_type>& t) {
    tw.check(t);
    ModuleHom<typename R::value_type> l{tw.n(), {}};
    l.alpha.assign(tw.n() * tw.n(), tw.vectors().zero());
    for (std::size_t g = 0; g < tw.n(); ++g)
        for (std::size_t h = 0; h < tw.n(); ++h)
            for (std::size_t k = 0; k < tw.n(); ++k) l(g, h).coeffs[k] = t[k](g, h);
    return l;
}

/// Table of the composite first o second: alpha(f, h) = sum_g first(f, g) * second(g, h).
template <CommutativeRing R>
ModuleHom<typename R::value_type> hom_compose(const Tower<R>& tw, const ModuleHom<typename R::value_type>& first,
                                              const ModuleHom<typename R::value_type>& second) {
    check_hom(tw, first);
    check_hom(tw, second);
    const auto& V = tw.vectors();
    ModuleHom<typename R::value_type> out{tw.n(), {}};
    out.alpha.assign(tw.n() * tw.n(), V.zero());
    for (std::size_t f = 0; f < tw.n(); ++f)
        for (std::size_t h = 0; h < tw.n(); ++h)
            for (std::size_t g = 0; g < tw.n(); ++g) V.mul_add(out(f, h), first(f, g), second(g, h));
    return out;
}

template <CommutativeRing R>
bool hom_eq(const Tower<R>& tw, const ModuleHom<typename R::value_type>& a,
            const ModuleHom<typename R::value_type>& b) {
    check_hom(tw, a);
    check_hom(tw, b);
    for (std::size_t i = 0; i < a.alpha.size(); ++i)
        if (!tw.vectors().eq(a.alpha[i], b.alpha[i])) return false;
    return true;
}

/**
 * Image of the natural basis element |1_G><h| under the map whose basis
 * images are given by the same alpha table read against B~_g instead of
 * B_g. Every such image is confined to row 1_G.
 */
template <CommutativeRing R>
Matrix<typename R::value_type> hom_on_natural_basis(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l,
                                                    std::size_t h) {
    check_hom(tw, l);
    tw.check_index(h);
    auto out = tw.zero_matrix();
    for (std::size_t g = 0; g < tw.n(); ++g) out = tw.add(out, tw.scalar_product(l(g, h), natural_basis(tw, g)));
    return out;
}

}  // namespace grt
