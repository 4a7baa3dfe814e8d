#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/hecke_expr.hpp>
#include <hecke/linsolve.hpp>
#include <hecke/spherical.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/vseries.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

inline constexpr int kDefaultOrder = 12;

namespace detail
{

inline Exponents x0_power(int nvars, int k)
{
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[0] = k;
    return e;
}

inline void check_genus(int n)
{
    if (n < 1 || n > 3) {
        throw IndexOutOfRange("genus " + std::to_string(n) + " outside 1..3");
    }
}

// Calls fn(deltas) for every 0 <= d_1 <= ... <= d_n <= bound.
inline void for_each_chain(int n, int bound, const std::function<void(const std::vector<int> &)> &fn)
{
    std::vector<int> d;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(d.size()) == n) {
            fn(d);
            return;
        }
        for (int x = lo; x <= bound; ++x) {
            d.push_back(x);
            rec(x);
            d.pop_back();
        }
    };
    rec(0);
}

} // namespace detail

// R_n(v) = sum_delta sum_{0<=d_1<=...<=d_n<=delta} p^{n d_1 + (n-1) d_2 + ... + d_n}
//          omega(t(p^{d_1}, ..., p^{d_n})) (x0 v)^delta, truncated at v^order.
inline VSeries r_series(int n, int order)
{
    detail::check_genus(n);
    if (order < 0) {
        throw IndexOutOfRange("negative order");
    }
    const int nv = n + 1;
    // by_top[k]: contribution of all chains with d_n = k (without the x0 power).
    std::vector<XPoly> by_top(static_cast<std::size_t>(order + 1), XPoly(nv));
    detail::for_each_chain(n, order, [&](const std::vector<int> &d) {
        int shift = 0;
        std::vector<int> parts;
        for (int i = 0; i < n; ++i) {
            shift += (n - i) * d[static_cast<std::size_t>(i)];
            parts.push_back(d[static_cast<std::size_t>(n - 1 - i)]);
        }
        by_top[static_cast<std::size_t>(d.back())] +=
            omega_hl(Signature(parts), n) * PrimeLaurent::p_power(shift);
    });
    VSeries r(nv, order);
    XPoly running(nv);
    for (int delta = 0; delta <= order; ++delta) {
        running += by_top[static_cast<std::size_t>(delta)];
        r.set(delta, running.shifted(detail::x0_power(nv, delta)));
    }
    return r;
}

// Q_n(v) = prod_{S subset of {1..n}} (1 - x0 x_S v), a polynomial of degree 2^n.
inline VSeries q_poly(int n, int order = -1)
{
    detail::check_genus(n);
    const int nv = n + 1;
    const int deg = 1 << n;
    if (order < 0) {
        order = deg;
    }
    VSeries r = VSeries::one(nv, order);
    for (int mask = 0; mask < deg; ++mask) {
        Exponents e(static_cast<std::size_t>(nv), 0);
        e[0] = 1;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                e[static_cast<std::size_t>(i + 1)] = 1;
            }
        }
        r = r * one_minus(XPoly::monomial(e, PrimeLaurent(1)), order);
    }
    return r;
}

// P_n(v) = R_n(v) Q_n(v). The product is computed to v^order and every
// coefficient from v^{2^n - 1} up must vanish; returns the polynomial part.
inline VSeries p_numerator(int n, int order = kDefaultOrder)
{
    detail::check_genus(n);
    const int deg = (1 << n) - 2;
    if (order < deg + 6) {
        throw IndexOutOfRange("p_numerator needs order >= 2^n + 4");
    }
    const VSeries prod = r_series(n, order) * q_poly(n, order);
    for (int k = deg + 1; k <= order; ++k) {
        if (!prod[k].is_zero()) {
            throw NonVanishingTail("coefficient of v^" + std::to_string(k) + " in R_" + std::to_string(n) +
                                   " * Q_" + std::to_string(n) + " is nonzero");
        }
    }
    return prod.truncated(deg);
}

// P_3(v) via the reduced sum over omega(t(1, p^a, p^b)) times the six middle
// factors (1 - x0 x_S v), |S| in {1, 2}.
inline VSeries p3_closed_form(int bound = kDefaultOrder, int order = kDefaultOrder)
{
    if (bound < order) {
        throw IndexOutOfRange("p3_closed_form needs bound >= order");
    }
    constexpr int nv = 4;
    VSeries sum(nv, order);
    for (int b = 0; b <= std::min(bound, order); ++b) {
        for (int a = 0; a <= b; ++a) {
            sum.add_to(b, omega_hl(Signature{b, a, 0}, 3).shifted(detail::x0_power(nv, b)) *
                              PrimeLaurent::p_power(2 * a + b));
        }
    }
    for (int mask = 1; mask < 7; ++mask) {
        Exponents e{1, 0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            if (mask & (1 << i)) {
                e[static_cast<std::size_t>(i + 1)] = 1;
            }
        }
        sum = sum * one_minus(XPoly::monomial(e, PrimeLaurent(1)), order);
    }
    return sum;
}

// Generator monomials whose spherical image has the given x0-weight, ordered
// by degree then exponent tuple.
inline std::vector<GenMonomial> generator_monomials(int weight)
{
    std::vector<GenMonomial> out;
    for (int d = 0; 2 * d <= weight; ++d) {
        const int a = weight - 2 * d;
        for (int b = 0; b <= d; ++b) {
            for (int c = 0; b + c <= d; ++c) {
                out.push_back(gen_monomial(a, b, c, d - b - c));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail
{

struct GeneratorSystem {
    std::vector<GenMonomial> unknowns;
    std::vector<MsymKey> rows;
    LaurentMatrix matrix;
    std::vector<PrimeLaurent> rhs;
};

inline GeneratorSystem build_generator_system(const XPoly &target, int weight)
{
    if (target.nvars() != 4) {
        throw VarMismatch("express_in_generators expects nvars = 4");
    }
    for (const auto &[e, c] : target.terms()) {
        if (e[0] != weight) {
            throw InvalidArgument("target is not x0-homogeneous of weight " + std::to_string(weight));
        }
    }
    GeneratorSystem sys;
    sys.unknowns = generator_monomials(weight);
    std::vector<MsymDecomposition> cols;
    std::set<MsymKey> keys;
    for (const auto &m : sys.unknowns) {
        cols.push_back(to_msym(hecke_image(HeckeExpr::term(m, PrimeLaurent(1)))));
        for (const auto &[key, c] : cols.back()) {
            keys.insert(key);
        }
    }
    const MsymDecomposition goal = to_msym(target);
    for (const auto &[key, c] : goal) {
        keys.insert(key);
    }
    sys.rows.assign(keys.begin(), keys.end());
    for (const auto &key : sys.rows) {
        std::vector<PrimeLaurent> row;
        for (const auto &col : cols) {
            auto it = col.find(key);
            row.push_back(it == col.end() ? PrimeLaurent{} : it->second);
        }
        sys.matrix.push_back(std::move(row));
        auto it = goal.find(key);
        sys.rhs.push_back(it == goal.end() ? PrimeLaurent{} : it->second);
    }
    return sys;
}

} // namespace detail

// Writes an x0-homogeneous symmetric target as the spherical image of a unique
// polynomial in T(p), T_1(p^2), T_2(p^2), [p]_3 with Laurent coefficients.
inline HeckeExpr express_in_generators(const XPoly &target, int weight)
{
    const auto sys = detail::build_generator_system(target, weight);
    const auto sol = solve_unique(sys.matrix, sys.rhs);
    HeckeExpr out;
    for (std::size_t j = 0; j < sol.size(); ++j) {
        out.add_term(sys.unknowns[j], sol[j].to_laurent());
    }
    return out;
}

// Presentation of P_3(v): coefficients u_0..u_6 over the Hecke ring.
inline HeckePolynomial p3_in_generators()
{
    const VSeries p3 = p_numerator(3, kDefaultOrder);
    HeckePolynomial u;
    for (int j = 0; j <= p3.order(); ++j) {
        u.push_back(express_in_generators(p3[j], j));
    }
    if (!u[1].is_zero() || !u[5].is_zero()) {
        throw NoSolution("P_3 has nonzero v^1 or v^5 coefficient");
    }
    const HeckeExpr lead = HeckeExpr::term(gen_monomial(0, 0, 0, 3), PrimeLaurent::p_power(15));
    if (!(u[6] == lead)) {
        throw NoSolution("leading coefficient of P_3 is not p^15 [p]_3^3");
    }
    return u;
}

// Coefficients t_0..t_8 of Q_3(v) over the Hecke ring.
struct QCoefficients {
    std::array<HeckeExpr, 9> t;
};

// (p^6 [p]_3)^k.
inline HeckeExpr functional_factor(int k)
{
    return HeckeExpr::term(gen_monomial(0, 0, 0, k), PrimeLaurent::p_power(6 * k));
}

// t_{8-i} == (p^6 [p]_3)^{4-i} t_i for i = 0..8.
inline bool functional_eq_check(const QCoefficients &q)
{
    for (int i = 0; i <= 8; ++i) {
        const auto &lo = q.t[static_cast<std::size_t>(i)];
        const auto &hi = q.t[static_cast<std::size_t>(8 - i)];
        const bool ok = i <= 4 ? hi == functional_factor(4 - i) * lo : hi * functional_factor(i - 4) == lo;
        if (!ok) {
            return false;
        }
    }
    return true;
}

// Presentation of Q_3(v): t_1..t_4 solved from Q_3's spherical image, t_5..t_7
// from the functional equation, t_8 = p^24 [p]_3^4; every t_j is then checked
// against the v^j coefficient of Q_3.
inline QCoefficients q3_in_generators()
{
    const VSeries q = q_poly(3);
    QCoefficients out;
    out.t[0] = HeckeExpr(1);
    for (int j = 1; j <= 4; ++j) {
        out.t[static_cast<std::size_t>(j)] = express_in_generators(q[j], j);
    }
    for (int j = 5; j <= 7; ++j) {
        out.t[static_cast<std::size_t>(j)] = functional_factor(j - 4) * out.t[static_cast<std::size_t>(8 - j)];
    }
    out.t[8] = functional_factor(4);
    for (int j = 0; j <= 8; ++j) {
        if (!(hecke_image(out.t[static_cast<std::size_t>(j)]) == q[j])) {
            throw FunctionalEquationViolated("image of t_" + std::to_string(j) + " differs from Q_3");
        }
    }
    return out;
}

// nu: x0 -> 1, x_i -> p^i, applied coefficient-wise. Coefficients become
// constant polynomials.
inline VSeries specialize_nu(const VSeries &s)
{
    if (s.nvars() != 4) {
        throw VarMismatch("specialize_nu expects nvars = 4");
    }
    std::map<int, XPoly> nu;
    for (int i = 0; i < 4; ++i) {
        nu.emplace(i, XPoly::constant(4, PrimeLaurent::p_power(i)));
    }
    VSeries r(4, s.order());
    for (int k = 0; k <= s.order(); ++k) {
        r.set(k, substitute(s[k], nu));
    }
    return r;
}

} // namespace hecke
