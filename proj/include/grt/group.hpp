#pragma once

/**
 * @file group.hpp
 * @brief Finite abelian groups Z_{n1} x ... x Z_{nk}.
 *
 * Elements are tuples of residues. Every element also has a canonical linear
 * index in [0, order) using mixed radix with the first factor most
 * significant; all coefficient tables in the library are laid out in this
 * order.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "grt/errors.hpp"

namespace grt {

struct GroupElement {
    std::vector<std::size_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class FiniteAbelianGroup {
public:
    /// Trivial group Z_1.
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::size_t>{1}) {}

    explicit FiniteAbelianGroup(std::vector<std::size_t> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty())
            throw invalid_group_spec("group needs at least one cyclic factor");
        strides_.assign(factors_.size(), 1);
        order_ = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            if (factors_[i] == 0)
                throw invalid_group_spec("cyclic factor must be positive");
            strides_[i] = order_;
            order_ *= factors_[i];
        }
    }

    const std::vector<std::size_t>& factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    bool is_cyclic() const noexcept { return factors_.size() == 1; }

    /// Stride of factor `axis` in the linear index.
    std::size_t stride(std::size_t axis) const { return strides_.at(axis); }

    GroupElement identity() const {
        return GroupElement{std::vector<std::size_t>(factors_.size(), 0)};
    }

    bool contains(const GroupElement& g) const noexcept {
        if (g.residues.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (g.residues[i] >= factors_[i]) return false;
        return true;
    }

    GroupElement compose(const GroupElement& g, const GroupElement& h) const {
        require_member(g);
        require_member(h);
        GroupElement out{std::vector<std::size_t>(factors_.size())};
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out.residues[i] = (g.residues[i] + h.residues[i]) % factors_[i];
        return out;
    }

    GroupElement inverse(const GroupElement& g) const {
        require_member(g);
        GroupElement out{std::vector<std::size_t>(factors_.size())};
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out.residues[i] = (factors_[i] - g.residues[i]) % factors_[i];
        return out;
    }

    std::size_t index(const GroupElement& g) const {
        require_member(g);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx += g.residues[i] * strides_[i];
        return idx;
    }

    GroupElement elem(std::size_t i) const {
        if (i >= order_)
            throw index_error("group index " + std::to_string(i) + " out of range for order " +
                              std::to_string(order_));
        GroupElement out{std::vector<std::size_t>(factors_.size())};
        for (std::size_t a = 0; a < factors_.size(); ++a) {
            out.residues[a] = i / strides_[a];
            i %= strides_[a];
        }
        return out;
    }

    // Index-level arithmetic used by the convolution kernels. Arguments are
    // assumed in range.

    std::size_t compose_index(std::size_t i, std::size_t j) const noexcept {
        if (factors_.size() == 1) {
            std::size_t s = i + j;
            return s >= order_ ? s - order_ : s;
        }
        std::size_t out = 0;
        for (std::size_t a = 0; a < factors_.size(); ++a) {
            std::size_t di = i / strides_[a], dj = j / strides_[a];
            i %= strides_[a];
            j %= strides_[a];
            std::size_t d = di + dj;
            if (d >= factors_[a]) d -= factors_[a];
            out += d * strides_[a];
        }
        return out;
    }

    std::size_t inverse_index(std::size_t i) const noexcept {
        if (factors_.size() == 1) return i == 0 ? 0 : order_ - i;
        std::size_t out = 0;
        for (std::size_t a = 0; a < factors_.size(); ++a) {
            std::size_t d = i / strides_[a];
            i %= strides_[a];
            out += (d == 0 ? 0 : factors_[a] - d) * strides_[a];
        }
        return out;
    }

    /// Index of g * h^{-1}.
    std::size_t quotient_index(std::size_t g, std::size_t h) const noexcept {
        return compose_index(g, inverse_index(h));
    }

    /// Canonical spec string, e.g. "Z4xZ2".
    std::string spec() const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += 'x';
            s += 'Z' + std::to_string(factors_[i]);
        }
        return s;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

private:
    void require_member(const GroupElement& g) const {
        if (!contains(g)) throw group_mismatch("element is not a member of " + spec());
    }

    std::vector<std::size_t> factors_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
};

/// Builds Z_{m1} x ... x Z_{mk}; rejects empty lists and non-positive moduli.
inline FiniteAbelianGroup make_group(const std::vector<long long>& moduli) {
    if (moduli.empty()) throw invalid_group_spec("empty modulus list");
    std::vector<std::size_t> factors;
    factors.reserve(moduli.size());
    for (long long m : moduli) {
        if (m < 1) throw invalid_group_spec("modulus must be >= 1, got " + std::to_string(m));
        factors.push_back(static_cast<std::size_t>(m));
    }
    return FiniteAbelianGroup(std::move(factors));
}

inline FiniteAbelianGroup make_group(std::initializer_list<long long> moduli) {
    return make_group(std::vector<long long>(moduli));
}

/// Parses `Z<n>` or `Z<n1>xZ<n2>x...`, case-insensitive.
inline FiniteAbelianGroup parse_group(std::string_view text) {
    auto fail = [&] { return invalid_group_spec("invalid group spec '" + std::string(text) + "'"); };
    std::vector<long long> moduli;
    std::size_t pos = 0;
    while (true) {
        if (pos >= text.size() || std::tolower(static_cast<unsigned char>(text[pos])) != 'z')
            throw fail();
        ++pos;
        std::size_t start = pos;
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > (1LL << 40)) throw fail();
            ++pos;
        }
        if (pos == start) throw fail();
        moduli.push_back(value);
        if (pos == text.size()) break;
        if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x') throw fail();
        ++pos;
    }
    return make_group(moduli);
}

/// All groups of order <= max_order in invariant-factor form d1 | d2 | ... | dk.
inline std::vector<FiniteAbelianGroup> enumerate_groups(std::size_t max_order) {
    std::vector<FiniteAbelianGroup> out;
    out.emplace_back(std::vector<std::size_t>{1});
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::size_t product) -> void {
        std::size_t start = current.empty() ? 2 : current.back();
        for (std::size_t d = start; product * d <= max_order; d += (current.empty() ? 1 : current.back())) {
            if (!current.empty() && d % current.back() != 0) continue;
            current.push_back(d);
            out.emplace_back(current);
            self(self, product * d);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

}  // namespace grt
