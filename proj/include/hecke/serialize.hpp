#pragma once

// Canonical JSON encodings:
//   PrimeLaurent  {"<p-exp>": "<num>/<den>", ...}           ascending exponent
//   XPoly         {"nvars": n, "terms": [{"x": [e0, ...], "c": <PrimeLaurent>}]}
//   VSeries       {"order": N, "coeffs": [<XPoly>, ...]}
//   HeckeExpr     {"terms": [{"g": [a, b, c, d], "c": <PrimeLaurent>}]}
//   QCoefficients [<HeckeExpr> x 9]

#include <string>
#include <vector>

#include <json.hpp>

#include <hecke/errors.hpp>
#include <hecke/hecke_expr.hpp>
#include <hecke/laurent.hpp>
#include <hecke/series.hpp>
#include <hecke/vseries.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

using Json = nlohmann::ordered_json;

inline Json to_json(const PrimeLaurent &a)
{
    Json j = Json::object();
    for (const auto &[e, c] : a.terms()) {
        j[std::to_string(e)] = rational_to_string(c);
    }
    return j;
}

inline Json to_json(const XPoly &a)
{
    Json terms = Json::array();
    for (const auto &[e, c] : a.terms()) {
        terms.push_back(Json{{"x", e}, {"c", to_json(c)}});
    }
    return Json{{"nvars", a.nvars()}, {"terms", std::move(terms)}};
}

inline Json to_json(const VSeries &s)
{
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const HeckeExpr &h)
{
    Json terms = Json::array();
    for (const auto &[m, c] : h.terms()) {
        terms.push_back(Json{{"g", m.exps}, {"c", to_json(c)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const QCoefficients &q)
{
    Json arr = Json::array();
    for (const auto &t : q.t) {
        arr.push_back(to_json(t));
    }
    return arr;
}

namespace detail
{

inline void require(bool cond, const std::string &what)
{
    if (!cond) {
        throw ParseError(what);
    }
}

inline int parse_exponent_key(const std::string &k)
{
    std::size_t used = 0;
    int e = 0;
    try {
        e = std::stoi(k, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    require(used == k.size() && !k.empty(), "bad exponent key '" + k + "'");
    return e;
}

} // namespace detail

inline PrimeLaurent laurent_from_json(const Json &j)
{
    detail::require(j.is_object(), "PrimeLaurent must be an object");
    PrimeLaurent r;
    for (const auto &[k, v] : j.items()) {
        detail::require(v.is_string(), "coefficient must be a string");
        r.add_term(detail::parse_exponent_key(k), rational_from_string(v.get<std::string>()));
    }
    return r;
}

inline XPoly xpoly_from_json(const Json &j)
{
    detail::require(j.is_object() && j.contains("nvars") && j.contains("terms"), "XPoly needs nvars and terms");
    detail::require(j["nvars"].is_number_integer() && j["nvars"].get<int>() >= 0, "bad nvars");
    detail::require(j["terms"].is_array(), "terms must be an array");
    XPoly r(j["nvars"].get<int>());
    for (const auto &t : j["terms"]) {
        detail::require(t.is_object() && t.contains("x") && t.contains("c"), "term needs x and c");
        detail::require(t["x"].is_array(), "x must be an array");
        Exponents e;
        for (const auto &x : t["x"]) {
            detail::require(x.is_number_integer() && x.get<int>() >= 0, "exponents must be non-negative integers");
            e.push_back(x.get<int>());
        }
        detail::require(static_cast<int>(e.size()) == r.nvars(), "exponent vector length differs from nvars");
        r.add_term(std::move(e), laurent_from_json(t["c"]));
    }
    return r;
}

inline VSeries vseries_from_json(const Json &j)
{
    detail::require(j.is_object() && j.contains("order") && j.contains("coeffs"), "VSeries needs order and coeffs");
    const int order = j["order"].get<int>();
    detail::require(order >= 0 && j["coeffs"].is_array() &&
                        static_cast<int>(j["coeffs"].size()) == order + 1,
                    "coeffs must have order+1 entries");
    std::vector<XPoly> coeffs;
    for (const auto &c : j["coeffs"]) {
        coeffs.push_back(xpoly_from_json(c));
    }
    const int nvars = coeffs.front().nvars();
    for (const auto &c : coeffs) {
        detail::require(c.nvars() == nvars, "series coefficients disagree on nvars");
    }
    return VSeries(nvars, order, coeffs);
}

inline HeckeExpr hecke_from_json(const Json &j)
{
    detail::require(j.is_object() && j.contains("terms") && j["terms"].is_array(), "HeckeExpr needs terms");
    HeckeExpr r;
    for (const auto &t : j["terms"]) {
        detail::require(t.is_object() && t.contains("g") && t.contains("c"), "term needs g and c");
        detail::require(t["g"].is_array() && t["g"].size() == 4, "g must have four exponents");
        GenMonomial m;
        for (std::size_t i = 0; i < 4; ++i) {
            detail::require(t["g"][i].is_number_integer() && t["g"][i].get<int>() >= 0, "bad generator exponent");
            m.exps[i] = t["g"][i].get<int>();
        }
        r.add_term(m, laurent_from_json(t["c"]));
    }
    return r;
}

inline QCoefficients qcoefficients_from_json(const Json &j)
{
    detail::require(j.is_array() && j.size() == 9, "QCoefficients must be an array of 9");
    QCoefficients q;
    for (std::size_t i = 0; i < 9; ++i) {
        q.t[i] = hecke_from_json(j[i]);
    }
    return q;
}

} // namespace hecke
