#pragma once

/**
 * @file tower.hpp
 * @brief The tower V = RG, M = M_n(R) ~ VG, T = MG and its induced products.
 *
 * With n = |G|, rows and columns of every matrix are addressed by group
 * indices. A matrix X doubles as the element sum_s X_s |s> of VG whose
 * coefficient X_s is column s.
 *
 * The circulant constructions (circ_matrix, block_circulant) are the
 * matrix formulations of the convolution products and serve as
 * cross-checks.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "grt/group_ring.hpp"

namespace grt {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Element sum_g T_g |g> of T = MG, stored as frontal slices in group-index order.
template <class T>
struct Tensor {
    std::vector<Matrix<T>> slices;

    std::size_t size() const noexcept { return slices.size(); }
    Matrix<T>& operator[](std::size_t g) { return slices[g]; }
    const Matrix<T>& operator[](std::size_t g) const { return slices[g]; }

    friend bool operator==(const Tensor&, const Tensor&) = default;
};

template <CommutativeRing R>
class Tower {
public:
    using ring_type = R;
    using scalar = typename R::value_type;
    using vector_type = GroupRingElement<scalar>;
    using matrix_type = Matrix<scalar>;
    using tensor_type = Tensor<scalar>;

    Tower(FiniteAbelianGroup group, R ring) : vectors_(std::move(group), std::move(ring)) {}

    const FiniteAbelianGroup& group() const noexcept { return vectors_.group(); }
    const R& ring() const noexcept { return vectors_.coeff_ring(); }
    /// The group ring V = RG.
    const GroupRing<R>& vectors() const noexcept { return vectors_; }
    std::size_t n() const noexcept { return vectors_.order(); }

    // -- matrices ----------------------------------------------------------

    matrix_type zero_matrix() const { return matrix_type(n(), ring().zero()); }

    matrix_type identity_matrix() const {
        matrix_type m = zero_matrix();
        for (std::size_t i = 0; i < n(); ++i) m(i, i) = ring().one();
        return m;
    }

    /// |j><k|.
    matrix_type outer(std::size_t j, std::size_t k) const {
        check_index(j);
        check_index(k);
        matrix_type m = zero_matrix();
        m(j, k) = ring().one();
        return m;
    }

    matrix_type matrix_from_rows(const std::vector<std::vector<scalar>>& rows) const {
        if (rows.size() != n()) throw mismatch_error("matrix needs " + std::to_string(n()) + " rows");
        matrix_type m = zero_matrix();
        for (std::size_t r = 0; r < n(); ++r) {
            if (rows[r].size() != n()) throw mismatch_error("ragged matrix row");
            for (std::size_t c = 0; c < n(); ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    /// Column s of X: the coefficient of |s> when X is read as an element of VG.
    vector_type column(const matrix_type& x, std::size_t s) const {
        check(x);
        check_index(s);
        vector_type v = vectors_.zero();
        for (std::size_t j = 0; j < n(); ++j) v.coeffs[j] = x(j, s);
        return v;
    }

    vector_type row(const matrix_type& x, std::size_t r) const {
        check(x);
        check_index(r);
        vector_type v = vectors_.zero();
        for (std::size_t k = 0; k < n(); ++k) v.coeffs[k] = x(r, k);
        return v;
    }

    void set_column(matrix_type& x, std::size_t s, const vector_type& v) const {
        check(x);
        vectors_.check(v);
        for (std::size_t j = 0; j < n(); ++j) x(j, s) = v.coeffs[j];
    }

    /// Matrix whose column s is cols[s].
    matrix_type from_columns(const std::vector<vector_type>& cols) const {
        if (cols.size() != n()) throw mismatch_error("need one column per group element");
        matrix_type m = zero_matrix();
        for (std::size_t s = 0; s < n(); ++s) set_column(m, s, cols[s]);
        return m;
    }

    matrix_type add(const matrix_type& a, const matrix_type& b) const {
        check(a);
        check(b);
        matrix_type out = a;
        for (std::size_t i = 0; i < out.data().size(); ++i)
            out.data()[i] = ring().add(a.data()[i], b.data()[i]);
        return out;
    }

    matrix_type sub(const matrix_type& a, const matrix_type& b) const {
        check(a);
        check(b);
        matrix_type out = a;
        for (std::size_t i = 0; i < out.data().size(); ++i)
            out.data()[i] = ring().sub(a.data()[i], b.data()[i]);
        return out;
    }

    /// Contracted product c_ik = sum_j a_ij b_jk.
    matrix_type matrix_multiply(const matrix_type& a, const matrix_type& b) const {
        check(a);
        check(b);
        matrix_type out = zero_matrix();
        multiply_accumulate(out, a, b);
        return out;
    }

    /// A v for v in V read as a column vector.
    vector_type apply(const matrix_type& a, const vector_type& v) const {
        check(a);
        vectors_.check(v);
        vector_type out = vectors_.zero();
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j) ring().mul_add(out.coeffs[i], a(i, j), v.coeffs[j]);
        return out;
    }

    bool eq(const matrix_type& a, const matrix_type& b) const {
        check(a);
        check(b);
        for (std::size_t i = 0; i < a.data().size(); ++i)
            if (!ring().eq(a.data()[i], b.data()[i])) return false;
        return true;
    }

    double residual(const matrix_type& a, const matrix_type& b) const {
        check(a);
        check(b);
        double r = 0.0;
        for (std::size_t i = 0; i < a.data().size(); ++i)
            r = std::max(r, ring().residual(a.data()[i], b.data()[i]));
        return r;
    }

    bool is_zero(const matrix_type& a) const {
        check(a);
        for (const auto& v : a.data())
            if (!ring().is_zero(v)) return false;
        return true;
    }

    matrix_type sample_matrix(Rng& rng) const {
        matrix_type m = zero_matrix();
        for (auto& v : m.data()) v = ring().sample(rng);
        return m;
    }

    // -- circulant formulations --------------------------------------------

    /// Group circulant with entry (g, h) = a_{g h^{-1}}; for Z_n the first column is a.
    matrix_type circ_matrix(const vector_type& a) const {
        vectors_.check(a);
        matrix_type m = zero_matrix();
        for (std::size_t g = 0; g < n(); ++g)
            for (std::size_t h = 0; h < n(); ++h) m(g, h) = a.coeffs[group().quotient_index(g, h)];
        return m;
    }

    /// n^2 x n^2 block matrix with block (g, h) = T_{g h^{-1}}.
    matrix_type block_circulant(const tensor_type& t) const {
        check(t);
        const std::size_t N = n();
        matrix_type big(N * N, ring().zero());
        for (std::size_t g = 0; g < N; ++g)
            for (std::size_t h = 0; h < N; ++h) {
                const matrix_type& blk = t[group().quotient_index(g, h)];
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t j = 0; j < N; ++j) big(g * N + i, h * N + j) = blk(i, j);
            }
        return big;
    }

    /// blockcirc(T) applied to X stacked as the n^2 vector (column 0; column 1; ...).
    matrix_type block_circulant_apply(const tensor_type& t, const matrix_type& x) const {
        check(x);
        const matrix_type big = block_circulant(t);
        const std::size_t N = n();
        std::vector<scalar> stacked(N * N, ring().zero());
        for (std::size_t s = 0; s < N; ++s)
            for (std::size_t j = 0; j < N; ++j) stacked[s * N + j] = x(j, s);
        const std::vector<scalar> y = dense_apply(big, stacked);
        matrix_type out = zero_matrix();
        for (std::size_t s = 0; s < N; ++s)
            for (std::size_t j = 0; j < N; ++j) out(j, s) = y[s * N + j];
        return out;
    }

    /// blockcirc(A) applied to B stacked as the n^2 x n block column (B_0; B_1; ...).
    tensor_type block_circulant_apply(const tensor_type& a, const tensor_type& b) const {
        check(b);
        const matrix_type big = block_circulant(a);
        const std::size_t N = n();
        tensor_type out = zero_tensor();
        std::vector<scalar> stacked(N * N, ring().zero());
        for (std::size_t c = 0; c < N; ++c) {
            for (std::size_t g = 0; g < N; ++g)
                for (std::size_t i = 0; i < N; ++i) stacked[g * N + i] = b[g](i, c);
            const std::vector<scalar> y = dense_apply(big, stacked);
            for (std::size_t g = 0; g < N; ++g)
                for (std::size_t i = 0; i < N; ++i) out[g](i, c) = y[g * N + i];
        }
        return out;
    }

    // -- induced products --------------------------------------------------

    /// a o X: column g of the result is sum_i a_{g i^{-1}} * (column i of X).
    matrix_type scalar_product(const vector_type& a, const matrix_type& x) const {
        vectors_.check(a);
        check(x);
        matrix_type out = zero_matrix();
        for (std::size_t r = 0; r < n(); ++r) {
            if (exact_zero(a.coeffs[r])) continue;
            for (std::size_t s = 0; s < n(); ++s) {
                const std::size_t g = group().compose_index(r, s);
                for (std::size_t j = 0; j < n(); ++j) ring().mul_add(out(j, g), a.coeffs[r], x(j, s));
            }
        }
        return out;
    }

    /// T * X in T x M -> M: column h is sum_g T_{h g^{-1}} (column g of X).
    matrix_type tensor_matrix_product(const tensor_type& t, const matrix_type& x) const {
        check(t);
        check(x);
        matrix_type out = zero_matrix();
        for (std::size_t r = 0; r < n(); ++r)
            for (std::size_t s = 0; s < n(); ++s) {
                const std::size_t h = group().compose_index(r, s);
                const matrix_type& tr = t[r];
                for (std::size_t i = 0; i < n(); ++i)
                    for (std::size_t j = 0; j < n(); ++j) {
                        if (exact_zero(tr(i, j))) continue;
                        ring().mul_add(out(i, h), tr(i, j), x(j, s));
                    }
            }
        return out;
    }

    // -- tensors -----------------------------------------------------------

    tensor_type zero_tensor() const { return tensor_type{std::vector<matrix_type>(n(), zero_matrix())}; }

    /// E with E_{1_G} = I and every other slice zero.
    tensor_type identity_tensor() const {
        tensor_type t = zero_tensor();
        t[0] = identity_matrix();
        return t;
    }

    /// Embeds v in V as the tensor with slices v_g I.
    tensor_type embed_vector(const vector_type& v) const {
        vectors_.check(v);
        tensor_type t = zero_tensor();
        for (std::size_t g = 0; g < n(); ++g)
            for (std::size_t i = 0; i < n(); ++i) t[g](i, i) = v.coeffs[g];
        return t;
    }

    tensor_type tensor_from_slices(std::vector<matrix_type> slices) const {
        tensor_type t{std::move(slices)};
        check(t);
        return t;
    }

    tensor_type add(const tensor_type& a, const tensor_type& b) const {
        check(a);
        check(b);
        tensor_type out = a;
        for (std::size_t g = 0; g < n(); ++g) out[g] = add(a[g], b[g]);
        return out;
    }

    tensor_type sub(const tensor_type& a, const tensor_type& b) const {
        check(a);
        check(b);
        tensor_type out = a;
        for (std::size_t g = 0; g < n(); ++g) out[g] = sub(a[g], b[g]);
        return out;
    }

    /// Convolution in MG: C_k = sum_{rs=k} A_r B_s.
    tensor_type tensor_tensor_product(const tensor_type& a, const tensor_type& b) const {
        check(a);
        check(b);
        tensor_type out = zero_tensor();
        for (std::size_t r = 0; r < n(); ++r)
            for (std::size_t s = 0; s < n(); ++s)
                multiply_accumulate(out[group().compose_index(r, s)], a[r], b[s]);
        return out;
    }

    bool eq(const tensor_type& a, const tensor_type& b) const {
        check(a);
        check(b);
        for (std::size_t g = 0; g < n(); ++g)
            if (!eq(a[g], b[g])) return false;
        return true;
    }

    double residual(const tensor_type& a, const tensor_type& b) const {
        check(a);
        check(b);
        double r = 0.0;
        for (std::size_t g = 0; g < n(); ++g) r = std::max(r, residual(a[g], b[g]));
        return r;
    }

    tensor_type sample_tensor(Rng& rng) const {
        tensor_type t = zero_tensor();
        for (auto& s : t.slices) s = sample_matrix(rng);
        return t;
    }

    // -- shape checks ------------------------------------------------------

    void check(const matrix_type& x) const {
        if (x.size() != n() || x.data().size() != n() * n())
            throw mismatch_error("matrix is " + std::to_string(x.size()) + "x" +
                                 std::to_string(x.size()) + ", expected order " + std::to_string(n()));
    }

    void check(const tensor_type& t) const {
        if (t.size() != n())
            throw mismatch_error("tensor has " + std::to_string(t.size()) + " slices, expected " +
                                 std::to_string(n()));
        for (const auto& s : t.slices) check(s);
    }

    void check_index(std::size_t g) const {
        if (g >= n()) throw index_error("group index " + std::to_string(g) + " out of range");
    }

private:
    bool exact_zero(const scalar& v) const {
        if constexpr (is_approximate_v<R>) {
            return v == scalar{};
        } else {
            return ring().is_zero(v);
        }
    }

    std::vector<scalar> dense_apply(const matrix_type& a, const std::vector<scalar>& v) const {
        std::vector<scalar> out(a.size(), ring().zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) ring().mul_add(out[i], a(i, j), v[j]);
        return out;
    }

    void multiply_accumulate(matrix_type& out,const matrix_type& a, const matrix_type& b) const {
        const std::size_t N = a.size();
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const scalar& aij = a(i, j);
                if (exact_zero(aij)) continue;
                for (std::size_t k = 0; k < N; ++k) ring().mul_add(out(i, k), aij, b(j, k));
            }
    }

    GroupRing<R> vectors_;
};

}  // namespace grt
