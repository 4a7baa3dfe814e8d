#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <hecke/hecke_expr.hpp>
#include <hecke/laurent.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/vseries.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

enum class Style { Text, Latex };

namespace detail
{

// Polynomial in p (no negative exponents), highest power first.
inline std::string poly_in_p(const PrimeLaurent &a, Style style)
{
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto &[e, c] = *it;
        Rational mag = abs(c);
        if (c < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (e == 0 || mag != 1) {
            if (style == Style::Latex && mag.get_den() != 1) {
                os << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
            } else {
                os << mag.get_str();
            }
            if (e != 0 && style == Style::Text) {
                os << "*";
            }
        }
        if (e != 0) {
            os << "p";
            if (e != 1) {
                os << (style == Style::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e));
            }
        }
    }
    return os.str();
}

inline bool single_term(const PrimeLaurent &a)
{
    return a.terms().size() <= 1;
}

} // namespace detail

// A Laurent coefficient as numerator/p^k, e.g. "(2*p^2-p-1)/p^6", "1/p^4", "p+1".
// `as_factor` parenthesises multi-term values that multiply something else.
inline std::string render_coeff(const PrimeLaurent &c, Style style, bool as_factor = false)
{
    const int k = std::max(0, -c.min_exp());
    const PrimeLaurent num = c * PrimeLaurent::p_power(k);
    const std::string n = detail::poly_in_p(num, style);
    if (k == 0) {
        return (as_factor && !detail::single_term(num)) ? "(" + n + ")" : n;
    }
    const std::string den = k == 1 ? "p" : (style == Style::Latex ? "p^{" + std::to_string(k) + "}" : "p^" + std::to_string(k));
    if (style == Style::Latex) {
        return "\\frac{" + n + "}{" + den + "}";
    }
    return (detail::single_term(num) ? n : "(" + n + ")") + "/" + den;
}

inline std::string render_sym(const Signature &sig, Style style)
{
    std::string idx;
    for (int i = 0; i < sig.length(); ++i) {
        idx += (i ? "," : "") + std::to_string(sig[i]);
    }
    return style == Style::Latex ? "\\mathit{sym}_{" + idx + "}" : "sym[" + idx + "]";
}

namespace detail
{

// Multi-term coefficients arrive parenthesised, so a leading '-' always
// belongs to a single term and can become the separator.
inline std::string join_terms(const std::vector<std::string> &parts)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            s += parts[i];
        } else if (!parts[i].empty() && parts[i].front() == '-') {
            s += " - " + parts[i].substr(1);
        } else {
            s += " + " + parts[i];
        }
    }
    return s;
}

inline std::string x0_power(int w, Style style)
{
    if (w == 1) {
        return "x0";
    }
    return style == Style::Latex ? "x_0^{" + std::to_string(w) + "}" : "x0^" + std::to_string(w);
}

inline std::string coeff_times(const PrimeLaurent &c, const std::string &what, Style style)
{
    if (c.is_one()) {
        return what;
    }
    if (c == PrimeLaurent(-1) && style == Style::Text) {
        return "-" + what;
    }
    const std::string sep = style == Style::Latex ? "\\," : " * ";
    return render_coeff(c, style, true) + sep + what;
}

// Fallback for non-symmetric input: raw monomials.
inline std::string render_monomials(const XPoly &a, Style style)
{
    std::vector<std::string> parts;
    for (const auto &[e, c] : a.terms()) {
        std::string m;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!m.empty()) {
                m += style == Style::Latex ? " " : "*";
            }
            m += style == Style::Latex ? "x_{" + std::to_string(i) + "}" : "x" + std::to_string(i);
            if (e[i] != 1) {
                m += style == Style::Latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
            }
        }
        parts.push_back(m.empty() ? render_coeff(c, style, a.size() > 1) : coeff_times(c, m, style));
    }
    return parts.empty() ? "0" : join_terms(parts);
}

} // namespace detail

// Symmetric polynomial in the monomial symmetric basis, grouped by x0 power.
inline std::string render_symmetric(const XPoly &a, Style style = Style::Text)
{
    if (a.is_zero()) {
        return "0";
    }
    MsymDecomposition d;
    try {
        d = to_msym(a);
    } catch (const NotSymmetric &) {
        return detail::render_monomials(a, style);
    }
    std::map<int, std::vector<std::string>> groups;
    for (const auto &[key, c] : d) {
        groups[key.x0_weight].push_back(key.sig.is_zero() ? render_coeff(c, style, d.size() > 1)
                                                          : detail::coeff_times(c, render_sym(key.sig, style), style));
    }
    std::vector<std::string> out;
    for (const auto &[w, parts] : groups) {
        const std::string body = detail::join_terms(parts);
        if (w == 0) {
            out.push_back(body);
        } else {
            const std::string sep = style == Style::Latex ? "\\," : " * ";
            out.push_back(detail::x0_power(w, style) + sep + "(" + body + ")");
        }
    }
    return detail::join_terms(out);
}

inline std::string render_generator_monomial(const GenMonomial &m, Style style)
{
    static const char *text_names[4] = {"T(p)", "T1(p^2)", "T2(p^2)", "[p]_3"};
    static const char *latex_names[4] = {"\\mathbf{T}(p)", "\\mathbf{T}_1(p^2)", "\\mathbf{T}_2(p^2)",
                                         "[\\mathbf{p}]_3"};
    std::string s;
    for (std::size_t g = 0; g < 4; ++g) {
        if (m.exps[g] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += style == Style::Latex ? " " : "*";
        }
        s += style == Style::Latex ? latex_names[g] : text_names[g];
        if (m.exps[g] != 1) {
            s += style == Style::Latex ? "^{" + std::to_string(m.exps[g]) + "}" : "^" + std::to_string(m.exps[g]);
        }
    }
    return s;
}

inline std::string render_hecke(const HeckeExpr &h, Style style = Style::Text)
{
    if (h.is_zero()) {
        return "0";
    }
    std::vector<std::string> parts;
    for (const auto &[m, c] : h.terms()) {
        parts.push_back(m.degree() == 0 ? render_coeff(c, style, h.terms().size() > 1)
                                        : detail::coeff_times(c, render_generator_monomial(m, style), style));
    }
    return detail::join_terms(parts);
}

// One line per nonzero coefficient: "v^k: ...".
inline std::string render_series(const VSeries &s, Style style = Style::Text)
{
    std::ostringstream os;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) {
            continue;
        }
        const std::string body = render_symmetric(s[k], style);
        if (style == Style::Latex) {
            os << "v^{" << k << "}: & " << body << " \\\\\n";
        } else {
            os << "v^" << k << ": " << body << "\n";
        }
    }
    return os.str();
}

} // namespace hecke
