#pragma once

/**
 * @file module.hpp
 * @brief M as a free unitary left V-module under the scalar product a o X.
 *
 * The basis is the transposed one, B_g = |g><1_G|. Coordinates are read off
 * directly: the coordinate of B_l is row l of X. The natural basis
 * |1_G><g| of the group ring VG does not span M, because every combination
 * of it is supported on row 1_G only.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grt/report.hpp"
#include "grt/tower.hpp"

namespace grt {

template <class T>
using CoordinateVector = std::vector<GroupRingElement<T>>;

/// B_g = |g><1_G|.
template <CommutativeRing R>
Matrix<typename R::value_type> transposed_basis(const Tower<R>& tw, std::size_t g) {
    return tw.outer(g, 0);
}

/// |1_G><g|.
template <CommutativeRing R>
Matrix<typename R::value_type> natural_basis(const Tower<R>& tw, std::size_t g) {
    return tw.outer(0, g);
}

/// Coordinates a_l with (a_l)_k = <l|X|k>, i.e. row l of X.
template <CommutativeRing R>
CoordinateVector<typename R::value_type> decompose(const Tower<R>& tw,
                                                   const Matrix<typename R::value_type>& x) {
    tw.check(x);
    CoordinateVector<typename R::value_type> coords;
    coords.reserve(tw.n());
    for (std::size_t l = 0; l < tw.n(); ++l) coords.push_back(tw.row(x, l));
    return coords;
}

/// sum_l a_l o B_l.
template <CommutativeRing R>
Matrix<typename R::value_type> reconstruct(const Tower<R>& tw,
                                           const CoordinateVector<typename R::value_type>& coords) {
    if (coords.size() != tw.n())
        throw mismatch_error("coordinate vector needs " + std::to_string(tw.n()) + " entries");
    auto out = tw.zero_matrix();
    for (std::size_t l = 0; l < tw.n(); ++l)
        out = tw.add(out, tw.scalar_product(coords[l], transposed_basis(tw, l)));
    return out;
}

/**
 * Checks the module axioms and the two interplay lemmas on `samples` random
 * instances. Sample i draws from derive_seed(seed, i), so results do not
 * depend on evaluation order.
 *
 * Entries: distributes_over_matrix_sum, distributes_over_scalar_sum,
 * scalar_compatibility, unitary, scalar_assoc_lemma, triple_assoc_lemma,
 * vector_tensor_commute.
 */
template <CommutativeRing R>
std::vector<AxiomReport> check_module_axioms(const Tower<R>& tw, std::size_t samples, std::uint64_t seed) {
    std::vector<AxiomReport> reports = {
        {"distributes_over_matrix_sum"}, {"distributes_over_scalar_sum"},
        {"scalar_compatibility"},        {"unitary"},
        {"scalar_assoc_lemma"},          {"triple_assoc_lemma"},
        {"vector_tensor_commute"},
    };
    const auto& V = tw.vectors();
    auto record = [&](std::size_t slot, const auto& lhs, const auto& rhs) {
        reports[slot].record(tw.eq(lhs, rhs), tw.residual(lhs, rhs));
    };

    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, i));
        const auto a = V.sample(rng);
        const auto b = V.sample(rng);
        const auto x = tw.sample_matrix(rng);
        const auto y = tw.sample_matrix(rng);
        const auto t = tw.sample_tensor(rng);

        const auto ax = tw.scalar_product(a, x);
        const auto bx = tw.scalar_product(b, x);
        const auto a_bx = tw.scalar_product(a, bx);
        const auto ab_x = tw.scalar_product(V.mul(a, b), x);

        record(0, tw.scalar_product(a, tw.add(x, y)), tw.add(ax, tw.scalar_product(a, y)));
        record(1, tw.scalar_product(V.add(a, b), x), tw.add(ax, bx));
        record(2, ab_x, a_bx);
        record(3, tw.scalar_product(V.one(), x), x);
        record(4, a_bx, ab_x);
        record(5, tw.tensor_matrix_product(t, ax), tw.scalar_product(a, tw.tensor_matrix_product(t, x)));

        const auto ea = tw.embed_vector(a);
        record(6, tw.tensor_tensor_product(t, ea), tw.tensor_tensor_product(ea, t));
    }
    return reports;
}

struct DegeneracyWitness {
    std::size_t samples = 0;
    /// Samples where every a o B~_l, and their sum, stayed inside row 1_G.
    std::size_t confined = 0;
    /// Samples where the natural-basis combination reproduced the target.
    std::size_t reached_target = 0;
    std::size_t target_row = 0;
    std::size_t target_col = 0;

    bool pass() const noexcept { return samples > 0 && confined == samples && reached_target == 0; }
};

/**
 * Shows that X is not reachable through the natural basis B~_l = |1_G><l|:
 * for random coordinates, each a o B~_l (and their sum) has support inside
 * row 1_G, while X has a nonzero entry outside it.
 */
template <CommutativeRing R>
DegeneracyWitness natural_basis_degeneracy_witness(const Tower<R>& tw,
                                                   const Matrix<typename R::value_type>& x,
                                                   std::size_t samples, std::uint64_t seed) {
    tw.check(x);
    DegeneracyWitness w;
    bool found = false;
    for (std::size_t r = 1; r < tw.n() && !found; ++r)
        for (std::size_t c = 0; c < tw.n(); ++c)
            if (!tw.ring().is_zero(x(r, c))) {
                w.target_row = r;
                w.target_col = c;
                found = true;
                break;
            }
    if (!found) throw inapplicable_witness("matrix has no nonzero entry outside row 1_G");

    auto confined_to_first_row = [&](const auto& m) {
        for (std::size_t r = 1; r < tw.n(); ++r)
            for (std::size_t c = 0; c < tw.n(); ++c)
                if (!tw.ring().is_zero(m(r, c))) return false;
        return true;
    };

    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, i));
        bool ok = true;
        auto combo = tw.zero_matrix();
        for (std::size_t l = 0; l < tw.n(); ++l) {
            const auto term = tw.scalar_product(tw.vectors().sample(rng), natural_basis(tw, l));
            ok = ok && confined_to_first_row(term);
            combo = tw.add(combo, term);
        }
        ok = ok && confined_to_first_row(combo);
        ++w.samples;
        if (ok) ++w.confined;
        if (tw.eq(combo, x)) ++w.reached_target;
    }
    return w;
}

}  // namespace grt
