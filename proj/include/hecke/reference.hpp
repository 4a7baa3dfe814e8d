#pragma once

// Known closed-form values used as golden data by the verification suite and tests.
// Coefficients are written as (numerator listed from the top power down) / p^k.

#include <initializer_list>
#include <string>
#include <vector>

#include <hecke/hecke_expr.hpp>
#include <hecke/laurent.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/xpoly.hpp>

namespace hecke::reference
{

// (numerator coefficients, highest power first) / p^den_power
inline PrimeLaurent frac(std::initializer_list<long> num, int den_power)
{
    return PrimeLaurent::from_desc(num, -den_power);
}

struct SymTerm {
    int x0_weight;
    Signature sig;
    PrimeLaurent coeff;
};

inline XPoly build(const std::vector<SymTerm> &terms, int n = 3)
{
    MsymDecomposition d;
    for (const auto &t : terms) {
        d[MsymKey{t.x0_weight, t.sig}] += t.coeff;
    }
    return from_msym(d, n);
}

struct OmegaEntry {
    int item;
    Signature lambda; // t(1, p^a, p^b) <-> (b, a, 0)
    std::vector<SymTerm> value;
};

// omega(t(1, p^a, p^b)) for 0 <= a <= b <= 6, item order 1..28.
inline std::vector<OmegaEntry> omega_table()
{
    auto S = [](std::initializer_list<int> s, PrimeLaurent c) { return SymTerm{0, Signature(s), std::move(c)}; };
    return {
        {1, {0, 0, 0}, {S({0, 0, 0}, frac({1}, 0))}},
        {2, {1, 0, 0}, {S({1, 0, 0}, frac({1}, 1))}},
        {3, {1, 1, 0}, {S({1, 1, 0}, frac({1}, 3))}},
        {4, {2, 0, 0}, {S({1, 1, 0}, frac({1, -1}, 3)), S({2, 0, 0}, frac({1}, 2))}},
        {5, {2, 1, 0}, {S({1, 1, 1}, frac({2, -1, -1}, 6)), S({2, 1, 0}, frac({1}, 4))}},
        {6, {2, 2, 0}, {S({2, 1, 1}, frac({1, -1}, 7)), S({2, 2, 0}, frac({1}, 6))}},
        {7,
         {3, 0, 0},
         {S({1, 1, 1}, frac({1, -2, 1}, 5)), S({2, 1, 0}, frac({1, -1, 0}, 5)), S({3, 0, 0}, frac({1}, 3))}},
        {8,
         {3, 1, 0},
         {S({2, 1, 1}, frac({2, -2}, 6)), S({2, 2, 0}, frac({1, -1}, 6)), S({3, 1, 0}, frac({1}, 5))}},
        {9,
         {3, 2, 0},
         {S({2, 2, 1}, frac({2, -2}, 8)), S({3, 1, 1}, frac({1, -1}, 8)), S({3, 2, 0}, frac({1}, 7))}},
        {10,
         {3, 3, 0},
         {S({2, 2, 2}, frac({1, -2, 1}, 11)), S({3, 2, 1}, frac({1, -1, 0}, 11)), S({3, 3, 0}, frac({1}, 9))}},
        {11,
         {4, 0, 0},
         {S({2, 1, 1}, frac({1, -2, 1}, 6)), S({2, 2, 0}, frac({1, -1, 0}, 6)), S({3, 1, 0}, frac({1, -1, 0}, 6)),
          S({4, 0, 0}, frac({1}, 4))}},
        {12,
         {4, 1, 0},
         {S({2, 2, 1}, frac({2, -3, 1}, 8)), S({3, 1, 1}, frac({2, -2, 0}, 8)), S({3, 2, 0}, frac({1, -1, 0}, 8)),
          S({4, 1, 0}, frac({1}, 6))}},
        {13,
         {4, 2, 0},
         {S({2, 2, 2}, frac({3, -4, 2, -1}, 11)), S({3, 2, 1}, frac({2, -3, 1, 0}, 11)),
          S({3, 3, 0}, frac({1, -1, 0, 0}, 11)), S({4, 1, 1}, frac({1, -1, 0, 0}, 11)), S({4, 2, 0}, frac({1}, 8))}},
        {14,
         {4, 3, 0},
         {S({3, 2, 2}, frac({2, -3, 1}, 12)), S({3, 3, 1}, frac({2, -2, 0}, 12)), S({4, 2, 1}, frac({1, -1, 0}, 12)),
          S({4, 3, 0}, frac({1}, 10))}},
        {15,
         {4, 4, 0},
         {S({3, 3, 2}, frac({1, -2, 1}, 14)), S({4, 2, 2}, frac({1, -1, 0}, 14)), S({4, 3, 1}, frac({1, -1, 0}, 14)),
          S({4, 4, 0}, frac({1}, 12))}},
        {16,
         {5, 0, 0},
         {S({2, 2, 1}, frac({1, -2, 1}, 7)), S({3, 1, 1}, frac({1, -2, 1}, 7)), S({3, 2, 0}, frac({1, -1, 0}, 7)),
          S({4, 1, 0}, frac({1, -1, 0}, 7)), S({5, 0, 0}, frac({1}, 5))}},
        {17,
         {5, 1, 0},
         {S({2, 2, 2}, frac({2, -4, 2}, 9)), S({3, 2, 1}, frac({2, -3, 1}, 9)), S({3, 3, 0}, frac({1, -1, 0}, 9)),
          S({4, 1, 1}, frac({2, -2, 0}, 9)), S({4, 2, 0}, frac({1, -1, 0}, 9)), S({5, 1, 0}, frac({1}, 7))}},
        {18,
         {5, 2, 0},
         {S({3, 2, 2}, frac({3, -5, 3, -1}, 12)), S({3, 3, 1}, frac({2, -4, 2, 0}, 12)),
          S({4, 2, 1}, frac({2, -3, 1, 0}, 12)), S({4, 3, 0}, frac({1, -1, 0, 0}, 12)),
          S({5, 1, 1}, frac({1, -1, 0, 0}, 12)), S({5, 2, 0}, frac({1}, 9))}},
        {19,
         {5, 3, 0},
         {S({3, 3, 2}, frac({3, -5, 3, -1}, 14)), S({4, 2, 2}, frac({2, -4, 2, 0}, 14)),
          S({4, 3, 1}, frac({2, -3, 1, 0}, 14)), S({4, 4, 0}, frac({1, -1, 0, 0}, 14)),
          S({5, 2, 1}, frac({1, -1, 0, 0}, 14)), S({5, 3, 0}, frac({1}, 11))}},
        {20,
         {5, 4, 0},
         {S({3, 3, 3}, frac({2, -4, 2}, 15)), S({4, 3, 2}, frac({2, -3, 1}, 15)), S({4, 4, 1}, frac({2, -2, 0}, 15)),
          S({5, 2, 2}, frac({1, -1, 0}, 15)), S({5, 3, 1}, frac({1, -1, 0}, 15)), S({5, 4, 0}, frac({1}, 13))}},
        {21,
         {5, 5, 0},
         {S({4, 3, 3}, frac({1, -2, 1}, 17)), S({4, 4, 2}, frac({1, -2, 1}, 17)), S({5, 3, 2}, frac({1, -1, 0}, 17)),
          S({5, 4, 1}, frac({1, -1, 0}, 17)), S({5, 5, 0}, frac({1}, 15))}},
        {22,
         {6, 0, 0},
         {S({2, 2, 2}, frac({1, -2, 1}, 8)), S({3, 2, 1}, frac({1, -2, 1}, 8)), S({3, 3, 0}, frac({1, -1, 0}, 8)),
          S({4, 1, 1}, frac({1, -2, 1}, 8)), S({4, 2, 0}, frac({1, -1, 0}, 8)), S({5, 1, 0}, frac({1, -1, 0}, 8)),
          S({6, 0, 0}, frac({1}, 6))}},
        {23,
         {6, 1, 0},
         {S({3, 2, 2}, frac({2, -4, 2}, 10)), S({3, 3, 1}, frac({2, -3, 1}, 10)), S({4, 2, 1}, frac({2, -3, 1}, 10)),
          S({4, 3, 0}, frac({1, -1, 0}, 10)), S({5, 1, 1}, frac({2, -2, 0}, 10)), S({5, 2, 0}, frac({1, -1, 0}, 10)),
          S({6, 1, 0}, frac({1}, 8))}},
        {24,
         {6, 2, 0},
         {S({3, 3, 2}, frac({3, -6, 4, -1}, 13)), S({4, 2, 2}, frac({3, -5, 3, -1}, 13)),
          S({4, 3, 1}, frac({2, -4, 2, 0}, 13)), S({4, 4, 0}, frac({1, -1, 0, 0}, 13)),
          S({5, 2, 1}, frac({2, -3, 1, 0}, 13)), S({5, 3, 0}, frac({1, -1, 0, 0}, 13)),
          S({6, 1, 1}, frac({1, -1, 0, 0}, 13)), S({6, 2, 0}, frac({1}, 10))}},
        {25,
         {6, 3, 0},
         {S({3, 3, 3}, frac({4, -7, 5, -2}, 15)), S({4, 3, 2}, frac({3, -6, 4, -1}, 15)),
          S({4, 4, 1}, frac({2, -4, 2, 0}, 15)), S({5, 2, 2}, frac({2, -4, 2, 0}, 15)),
          S({5, 3, 1}, frac({2, -3, 1, 0}, 15)), S({5, 4, 0}, frac({1, -1, 0, 0}, 15)),
          S({6, 2, 1}, frac({1, -1, 0, 0}, 15)), S({6, 3, 0}, frac({1}, 12))}},
        {26,
         {6, 4, 0},
         {S({4, 3, 3}, frac({3, -6, 4, -1}, 17)), S({4, 4, 2}, frac({3, -5, 3, -1}, 17)),
          S({5, 3, 2}, frac({2, -4, 2, 0}, 17)), S({5, 4, 1}, frac({2, -3, 1, 0}, 17)),
          S({5, 5, 0}, frac({1, -1, 0, 0}, 17)), S({6, 2, 2}, frac({1, -1, 0, 0}, 17)),
          S({6, 3, 1}, frac({1, -1, 0, 0}, 17)), S({6, 4, 0}, frac({1}, 14))}},
        {27,
         {6, 5, 0},
         {S({4, 4, 3}, frac({2, -4, 2}, 18)), S({5, 3, 3}, frac({2, -3, 1}, 18)), S({5, 4, 2}, frac({2, -3, 1}, 18)),
          S({5, 5, 1}, frac({2, -2, 0}, 18)), S({6, 3, 2}, frac({1, -1, 0}, 18)), S({6, 4, 1}, frac({1, -1, 0}, 18)),
          S({6, 5, 0}, frac({1}, 16))}},
        {28,
         {6, 6, 0},
         {S({4, 4, 4}, frac({1, -2, 1}, 20)), S({5, 4, 3}, frac({1, -2, 1}, 20)), S({5, 5, 2}, frac({1, -2, 1}, 20)),
          S({6, 3, 3}, frac({1, -1, 0}, 20)), S({6, 4, 2}, frac({1, -1, 0}, 20)), S({6, 5, 1}, frac({1, -1, 0}, 20)),
          S({6, 6, 0}, frac({1}, 18))}},
    };
}

// Spherical images of the genus-3 generators, written out in the msym basis.
inline XPoly image_Tp()
{
    return build({{1, {0, 0, 0}, 1}, {1, {1, 0, 0}, 1}, {1, {1, 1, 0}, 1}, {1, {1, 1, 1}, 1}});
}

inline XPoly image_T1()
{
    return build({{2, {2, 1, 1}, frac({1, 0, -1}, 3)},
                  {2, {2, 2, 1}, frac({1}, 1)},
                  {2, {2, 1, 0}, frac({1}, 1)},
                  {2, {1, 1, 1}, frac({1, -1}, 4) * PrimeLaurent::from_desc({3, 2, 1})},
                  {2, {1, 1, 0}, frac({1, 0, -1}, 3)},
                  {2, {1, 0, 0}, frac({1}, 1)}});
}

inline XPoly image_T2()
{
    return build({{2, {1, 1, 0}, frac({1}, 3)},
                  {2, {2, 1, 1}, frac({1}, 3)},
                  {2, {1, 1, 1}, frac({1, -1}, 6) * PrimeLaurent::from_desc({1, 1, 1})}});
}

inline XPoly image_T3()
{
    return build({{2, {1, 1, 1}, frac({1}, 6)}});
}

inline PrimeLaurent sm_1_3()
{
    return PrimeLaurent::from_desc({1, -1}) * PrimeLaurent::from_desc({1, 1, 1});
}

// Coefficients of P(x0, x1, x2, x3, v), v^0..v^6.
inline std::vector<XPoly> p3_numerator()
{
    const PrimeLaurent pp1 = PrimeLaurent::from_desc({1, 1, 1}); // p^2 + p + 1
    const PrimeLaurent v3 = frac({1, 1}, 2);                      // (p + 1)/p^2
    return {
        build({{0, {0, 0, 0}, 1}}),
        XPoly(4),
        build({{2, {2, 1, 1}, -frac({1}, 1)}, {2, {1, 1, 1}, -(pp1 * frac({1}, 2))}, {2, {1, 1, 0}, -frac({1}, 1)}}),
        build({{3, {2, 2, 2}, v3}, {3, {2, 2, 1}, v3}, {3, {2, 1, 1}, v3}, {3, {1, 1, 1}, v3}}),
        build({{4, {3, 2, 2}, -frac({1}, 2)}, {4, {2, 2, 2}, -(pp1 * frac({1}, 3))}, {4, {2, 2, 1}, -frac({1}, 2)}}),
        XPoly(4),
        build({{6, {3, 3, 3}, frac({1}, 3)}}),
    };
}

// Omega(Q_3(v)) in the monomial symmetric basis, v^0..v^8.
inline std::vector<XPoly> q3_image()
{
    auto T = [](int w, std::initializer_list<int> s, long c) { return SymTerm{w, Signature(s), PrimeLaurent(c)}; };
    return {
        build({T(0, {0, 0, 0}, 1)}),
        build({T(1, {1, 1, 1}, -1), T(1, {1, 1, 0}, -1), T(1, {1, 0, 0}, -1), T(1, {0, 0, 0}, -1)}),
        build({T(2, {1, 1, 1}, 4), T(2, {1, 0, 0}, 1), T(2, {2, 1, 1}, 2), T(2, {1, 1, 0}, 2), T(2, {2, 1, 0}, 1),
               T(2, {2, 2, 1}, 1)}),
        build({T(3, {3, 1, 1}, -1), T(3, {1, 1, 0}, -1), T(3, {2, 2, 1}, -4), T(3, {1, 1, 1}, -4),
               T(3, {2, 1, 0}, -1), T(3, {2, 2, 0}, -1), T(3, {2, 2, 2}, -4), T(3, {3, 2, 2}, -1),
               T(3, {3, 2, 1}, -1), T(3, {2, 1, 1}, -4)}),
        build({T(4, {3, 1, 1}, 1), T(4, {1, 1, 1}, 1), T(4, {3, 3, 1}, 1), T(4, {4, 2, 2}, 1), T(4, {2, 1, 1}, 2),
               T(4, {3, 2, 2}, 4), T(4, {3, 2, 1}, 2), T(4, {2, 2, 0}, 1), T(4, {2, 2, 2}, 8), T(4, {3, 3, 2}, 2),
               T(4, {3, 3, 3}, 1), T(4, {2, 2, 1}, 4)}),
        build({T(5, {4, 3, 3}, -1), T(5, {4, 3, 2}, -1), T(5, {2, 2, 1}, -1), T(5, {2, 2, 2}, -4),
               T(5, {3, 3, 2}, -4), T(5, {3, 3, 1}, -1), T(5, {3, 2, 2}, -4), T(5, {3, 3, 3}, -4),
               T(5, {4, 2, 2}, -1), T(5, {3, 2, 1}, -1)}),
        build({T(6, {3, 3, 2}, 2), T(6, {3, 2, 2}, 1), T(6, {4, 3, 3}, 2), T(6, {3, 3, 3}, 4), T(6, {4, 3, 2}, 1),
               T(6, {4, 4, 3}, 1)}),
        build({T(7, {4, 3, 3}, -1), T(7, {3, 3, 3}, -1), T(7, {4, 4, 4}, -1), T(7, {4, 4, 3}, -1)}),
        build({T(8, {4, 4, 4}, 1)}),
    };
}

inline GenMonomial gm(int a, int b, int c, int d)
{
    return gen_monomial(a, b, c, d);
}

// P_3(v) over the Hecke ring, v^0..v^6.
inline HeckePolynomial p3_generators()
{
    const PrimeLaurent quartic = PrimeLaurent::from_desc({1, -1, 1}) * PrimeLaurent::from_desc({1, 1, 1});
    const HeckeExpr inner = HeckeExpr::T2() + HeckeExpr(quartic) * HeckeExpr::pbracket();
    const HeckeExpr p2 = HeckeExpr(PrimeLaurent::p_power(2));
    return {
        HeckeExpr(1),
        HeckeExpr(),
        -(p2 * inner),
        HeckeExpr(PrimeLaurent::from_desc({1, 1}) * PrimeLaurent::p_power(4)) * HeckeExpr::Tp() * HeckeExpr::pbracket(),
        -(HeckeExpr(PrimeLaurent::p_power(7)) * HeckeExpr::pbracket() * inner),
        HeckeExpr(),
        HeckeExpr::term(gm(0, 0, 0, 3), PrimeLaurent::p_power(15)),
    };
}

// The indeterminate coefficients K_* of the weight-2, 3 and 4 ansatz.
struct KValue {
    std::string name;
    int v_power;
    GenMonomial monomial;
    PrimeLaurent value;
};

inline std::vector<KValue> k_values()
{
    const PrimeLaurent p = PrimeLaurent::p();
    const PrimeLaurent one_p2 = PrimeLaurent::from_desc({1, 0, 1});
    const PrimeLaurent k33 = -PrimeLaurent::p_power(6) * PrimeLaurent::from_desc({1, 2, -1}) *
                             PrimeLaurent::from_desc({1, -1, 1}) * PrimeLaurent::from_desc({1, 1, 1});
    return {
        {"K_T1p2", 2, gm(0, 1, 0, 0), p},
        {"K_T2p2", 2, gm(0, 0, 1, 0), PrimeLaurent::from_desc({1, 0, 1, 0})},
        {"K_T3p2", 2, gm(0, 0, 0, 1), p * one_p2 * one_p2},
        {"K_TpTp", 2, gm(2, 0, 0, 0), 0},
        {"K_TpT1p2", 3, gm(1, 1, 0, 0), 0},
        {"K_TpT2p2", 3, gm(1, 0, 1, 0), -PrimeLaurent::p_power(3)},
        {"K_TpT3p2", 3, gm(1, 0, 0, 1), -PrimeLaurent::p_power(3)},
        {"K_TpTpTp", 3, gm(3, 0, 0, 0), 0},
        {"K_T1p2T1p2", 4, gm(0, 2, 0, 0), 0},
        {"K_T1p2T2p2", 4, gm(0, 1, 1, 0), 0},
        {"K_T1p2T3p2", 4, gm(0, 1, 0, 1), -2 * PrimeLaurent::p_power(7)},
        {"K_T2p2T2p2", 4, gm(0, 0, 2, 0), PrimeLaurent::p_power(6)},
        {"K_T2p2T3p2", 4, gm(0, 0, 1, 1), -2 * PrimeLaurent::p_power(7) + 2 * PrimeLaurent::p_power(6)},
        {"K_T3p2T3p2", 4, gm(0, 0, 0, 2), k33},
        {"K_T1p2TpTp", 4, gm(2, 1, 0, 0), 0},
        {"K_T2p2TpTp", 4, gm(2, 0, 1, 0), 0},
        {"K_T3p2TpTp", 4, gm(2, 0, 0, 1), PrimeLaurent::p_power(6)},
        {"K_TpTpTpTp", 4, gm(4, 0, 0, 0), 0},
    };
}

// v^7 and v^8 coefficients of Q_3(v) over the Hecke ring.
inline HeckeExpr q3_t7()
{
    return HeckeExpr::term(gm(1, 0, 0, 3), -PrimeLaurent::p_power(18));
}
inline HeckeExpr q3_t8()
{
    return HeckeExpr::term(gm(0, 0, 0, 4), PrimeLaurent::p_power(24));
}

// nu-specialisation of P_3: expanded coefficients v^0..v^6.
inline std::vector<PrimeLaurent> p3_nu_expanded()
{
    using L = PrimeLaurent;
    return {
        L(1),
        L(),
        -L::from_desc({1, 1, 2, 1, 2, 1, 1, 0, 0}),
        L::from_desc({1, 2, 2, 3, 3, 2, 2, 1, 0, 0, 0, 0}),
        -L::from_desc({1, 1, 2, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0}),
        L(),
        L::p_power(15),
    };
}

// The factors of P_nu(v): (1 - p v)(1 - p^2 v)(1 - p^3 v)(1 - p^4 v) and
// (1 + (p + p^2 + p^3 + p^4) v + p^5 v^2), each as v-coefficient lists.
inline std::vector<std::vector<PrimeLaurent>> p3_nu_factors()
{
    using L = PrimeLaurent;
    return {
        {L(1), -L::p_power(1)},
        {L(1), -L::p_power(2)},
        {L(1), -L::p_power(3)},
        {L(1), -L::p_power(4)},
        {L(1), L::from_desc({1, 1, 1, 1, 0}), L::p_power(5)},
    };
}

} // namespace hecke::reference
