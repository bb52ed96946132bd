#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of elements, matrices, tensors, homomorphisms and reports.
 *
 * Every object carries {"group": "Z4xZ2", "ring": "q"} and then one of
 * "coeffs" (canonical index order), "entries" (list of rows), "slices"
 * (list of entries, group-index order) or "alpha" (rows g, columns h, each a
 * coefficient list). Rationals are "p/q" strings, zmod values integers,
 * f64 numbers and c64 [re, im] pairs. Nested group-ring coefficients are
 * coefficient lists.
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "grt/diag.hpp"
#include "grt/hom.hpp"
#include "grt/report.hpp"

namespace grt {

using json = nlohmann::json;

// -- scalar values -----------------------------------------------------------

inline json value_to_json(const RationalRing&, const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline mpq_class value_from_json(const RationalRing&, const json& j) {
    mpq_class v;
    if (j.is_number_integer()) {
        v = mpq_class(std::to_string(j.get<long long>()));
    } else if (j.is_string()) {
        if (v.set_str(j.get<std::string>(), 10) != 0) throw mismatch_error("bad rational '" + j.get<std::string>() + "'");
        if (v.get_den() == 0) throw mismatch_error("zero denominator");
    } else {
        throw mismatch_error("rational must be a \"p/q\" string");
    }
    v.canonicalize();
    return v;
}

inline json value_to_json(const ModRing&, std::uint64_t v) { return v; }

inline std::uint64_t value_from_json(const ModRing& r, const json& j) {
    if (!j.is_number_integer()) throw mismatch_error("zmod value must be an integer");
    return j.is_number_unsigned() ? j.get<std::uint64_t>() % r.modulus() : r.from_int(j.get<std::int64_t>());
}

inline json value_to_json(const RealRing&, double v) { return v; }

inline double value_from_json(const RealRing&, const json& j) {
    if (!j.is_number()) throw mismatch_error("f64 value must be a number");
    return j.get<double>();
}

inline json value_to_json(const ComplexRing&, const cplx& v) { return json::array({v.real(), v.imag()}); }

inline cplx value_from_json(const ComplexRing&, const json& j) {
    if (!j.is_array() || j.size() != 2) throw mismatch_error("c64 value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <CommutativeRing R>
json value_to_json(const GroupRing<R>& V, const GroupRingElement<typename R::value_type>& a) {
    V.check(a);
    json arr = json::array();
    for (const auto& c : a.coeffs) arr.push_back(value_to_json(V.coeff_ring(), c));
    return arr;
}

template <CommutativeRing R>
GroupRingElement<typename R::value_type> value_from_json(const GroupRing<R>& V, const json& j) {
    if (!j.is_array() || j.size() != V.order())
        throw mismatch_error("expected " + std::to_string(V.order()) + " coefficients");
    GroupRingElement<typename R::value_type> a;
    a.coeffs.reserve(V.order());
    for (const auto& c : j) a.coeffs.push_back(value_from_json(V.coeff_ring(), c));
    return a;
}

// -- structured objects ------------------------------------------------------

namespace detail {

template <CommutativeRing R>
json header(const FiniteAbelianGroup& g, const R& ring) {
    return json{{"group", g.spec()}, {"ring", ring.spec()}};
}

template <CommutativeRing R>
void check_header(const FiniteAbelianGroup& g, const R& ring, const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("ring"))
        throw mismatch_error("missing group/ring header");
    if (!(parse_group(j.at("group").get<std::string>()) == g))
        throw mismatch_error("group " + j.at("group").get<std::string>() + " does not match " + g.spec());
    if (j.at("ring").get<std::string>() != ring.spec())
        throw mismatch_error("ring " + j.at("ring").get<std::string>() + " does not match " + ring.spec());
}

template <CommutativeRing R>
json entries_to_json(const Tower<R>& tw, const Matrix<typename R::value_type>& x) {
    json rows = json::array();
    for (std::size_t r = 0; r < tw.n(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < tw.n(); ++c) row.push_back(value_to_json(tw.ring(), x(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <CommutativeRing R>
Matrix<typename R::value_type> entries_from_json(const Tower<R>& tw, const json& rows) {
    if (!rows.is_array() || rows.size() != tw.n()) throw mismatch_error("entries must have one row per group element");
    auto x = tw.zero_matrix();
    for (std::size_t r = 0; r < tw.n(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != tw.n()) throw mismatch_error("ragged entries row");
        for (std::size_t c = 0; c < tw.n(); ++c) x(r, c) = value_from_json(tw.ring(), rows[r][c]);
    }
    return x;
}

}  // namespace detail

template <CommutativeRing R>
json element_to_json(const GroupRing<R>& V, const GroupRingElement<typename R::value_type>& a) {
    json j = detail::header(V.group(), V.coeff_ring());
    j["coeffs"] = value_to_json(V, a);
    return j;
}

template <CommutativeRing R>
GroupRingElement<typename R::value_type> element_from_json(const GroupRing<R>& V, const json& j) {
    detail::check_header(V.group(), V.coeff_ring(), j);
    return value_from_json(V, j.at("coeffs"));
}

template <CommutativeRing R>
json matrix_to_json(const Tower<R>& tw, const Matrix<typename R::value_type>& x) {
    tw.check(x);
    json j = detail::header(tw.group(), tw.ring());
    j["entries"] = detail::entries_to_json(tw, x);
    return j;
}

template <CommutativeRing R>
Matrix<typename R::value_type> matrix_from_json(const Tower<R>& tw, const json& j) {
    detail::check_header(tw.group(), tw.ring(), j);
    return detail::entries_from_json(tw, j.at("entries"));
}

template <CommutativeRing R>
json tensor_to_json(const Tower<R>& tw, const Tensor<typename R::value_type>& t) {
    tw.check(t);
    json j = detail::header(tw.group(), tw.ring());
    json slices = json::array();
    for (const auto& s : t.slices) slices.push_back(detail::entries_to_json(tw, s));
    j["slices"] = std::move(slices);
    return j;
}

template <CommutativeRing R>
Tensor<typename R::value_type> tensor_from_json(const Tower<R>& tw, const json& j) {
    detail::check_header(tw.group(), tw.ring(), j);
    const json& slices = j.at("slices");
    if (!slices.is_array() || slices.size() != tw.n()) throw mismatch_error("tensor needs one slice per group element");
    Tensor<typename R::value_type> t;
    for (const auto& s : slices) t.slices.push_back(detail::entries_from_json(tw, s));
    return t;
}

template <CommutativeRing R>
json hom_to_json(const Tower<R>& tw, const ModuleHom<typename R::value_type>& l) {
    check_hom(tw, l);
    json j = detail::header(tw.group(), tw.ring());
    json rows = json::array();
    for (std::size_t g = 0; g < tw.n(); ++g) {
        json row = json::array();
        for (std::size_t h = 0; h < tw.n(); ++h) row.push_back(value_to_json(tw.vectors(), l(g, h)));
        rows.push_back(std::move(row));
    }
    j["alpha"] = std::move(rows);
    return j;
}

template <CommutativeRing R>
ModuleHom<typename R::value_type> hom_from_json(const Tower<R>& tw, const json& j) {
    detail::check_header(tw.group(), tw.ring(), j);
    const json& rows = j.at("alpha");
    if (!rows.is_array() || rows.size() != tw.n()) throw mismatch_error("alpha needs one row per group element");
    ModuleHom<typename R::value_type> l{tw.n(), {}};
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != tw.n()) throw mismatch_error("ragged alpha row");
        for (const auto& a : row) l.alpha.push_back(value_from_json(tw.vectors(), a));
    }
    return l;
}

// -- reports -----------------------------------------------------------------

inline json to_json(const AxiomReport& r) {
    return json{{"axiom", r.axiom}, {"samples", r.samples}, {"failures", r.failures}, {"max_residual", r.max_residual}};
}

inline json to_json(const EigenCheck& c) {
    return json{{"k", c.k},
                {"hypothesis_residual", c.hypothesis_residual},
                {"eigen_residual", c.eigen_residual},
                {"pass", c.pass}};
}

inline json to_json(const DiagReport& r) {
    json per_k = json::array();
    for (const auto& c : r.per_k) per_k.push_back(to_json(c));
    return json{{"hypothesis_holds", r.hypothesis_holds},
                {"hypothesis_residual", r.hypothesis_residual},
                {"per_k", std::move(per_k)},
                {"pass", r.pass()}};
}

inline json to_json(const DegeneracyWitness& w) {
    return json{{"samples", w.samples},
                {"confined", w.confined},
                {"reached_target", w.reached_target},
                {"target_entry", json::array({w.target_row, w.target_col})},
                {"pass", w.pass()}};
}

}  // namespace grt
