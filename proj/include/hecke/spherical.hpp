#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/hecke_expr.hpp>
#include <hecke/laurent.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

// phi_r(p) = (p - 1)(p^2 - 1)...(p^r - 1), phi_0 = 1.
inline PrimeLaurent phi(int r)
{
    if (r < 0) {
        throw IndexOutOfRange("phi(" + std::to_string(r) + ")");
    }
    PrimeLaurent acc(1);
    for (int k = 1; k <= r; ++k) {
        acc *= PrimeLaurent::p_power(k) - PrimeLaurent(1);
    }
    return acc;
}

// Number of invertible symmetric r x r matrices over F_p:
// p^{r(r+1)/2} * prod_{i=1}^{ceil(r/2)} (1 - p^{1-2i}).
inline PrimeLaurent sm_nonsingular(int r)
{
    if (r < 0) {
        throw IndexOutOfRange("sm_nonsingular(" + std::to_string(r) + ")");
    }
    PrimeLaurent acc = PrimeLaurent::p_power(r * (r + 1) / 2);
    for (int i = 1; i <= (r + 1) / 2; ++i) {
        acc *= PrimeLaurent(1) - PrimeLaurent::p_power(1 - 2 * i);
    }
    return acc;
}

// Number of symmetric a x a matrices of rank r over F_p:
// sm(r, r) * phi_a / (phi_r * phi_{a-r}).
inline PrimeLaurent sm(int r, int a)
{
    if (r < 0 || a < 0 || r > a) {
        throw IndexOutOfRange("sm(" + std::to_string(r) + ", " + std::to_string(a) + ")");
    }
    return div_exact(sm_nonsingular(r) * phi(a), phi(r) * phi(a - r));
}

namespace detail
{

inline int permutation_sign(const std::vector<int> &perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            inv += perm[i] > perm[j] ? 1 : 0;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

// prod_{1<=i<j<=n} (x_i - s * x_j) in nvars = n + 1.
inline XPoly vandermonde_like(int n, const PrimeLaurent &s)
{
    XPoly r = XPoly::constant(n + 1, PrimeLaurent(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            r *= XPoly::variable(n + 1, i) - XPoly::variable(n + 1, j) * s;
        }
    }
    return r;
}

// v_lambda(t) = prod_k prod_{j=1}^{m_k} (1 - t^j)/(1 - t) at t = 1/p.
inline PrimeLaurent multiplicity_factor(const Signature &lambda)
{
    PrimeLaurent acc(1);
    for (const auto &[part, mult] : lambda.multiplicities()) {
        for (int j = 1; j <= mult; ++j) {
            PrimeLaurent geometric;
            for (int i = 0; i < j; ++i) {
                geometric += PrimeLaurent::p_power(-i);
            }
            acc *= geometric;
        }
    }
    return acc;
}

} // namespace detail

// omega(t(p^lambda)) on the GL_n Hecke ring, in closed form:
//   p^{-sum_i i*lambda_i} / v_lambda(1/p)
//     * [sum_{w in S_n} sgn(w) w(x^lambda prod_{i<j}(x_i - x_j/p))] / prod_{i<j}(x_i - x_j).
// The result is a symmetric polynomial in x1..xn (nvars = n + 1).
inline XPoly omega_hl(const Signature &lambda, int n)
{
    if (lambda.length() != n) {
        throw LengthMismatch("lambda " + lambda.str() + " for n=" + std::to_string(n));
    }
    const int nv = n + 1;
    Exponents lead(static_cast<std::size_t>(nv), 0);
    int shift = 0;
    for (int i = 0; i < n; ++i) {
        lead[static_cast<std::size_t>(i + 1)] = lambda[i];
        shift += (i + 1) * lambda[i];
    }
    const XPoly seed = detail::vandermonde_like(n, PrimeLaurent::p_power(-1)).shifted(lead);

    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    XPoly antisym(nv);
    do {
        XPoly img = seed.permuted(perm);
        if (detail::permutation_sign(perm) > 0) {
            antisym += img;
        } else {
            antisym -= img;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));

    XPoly sym = div_exact(antisym, detail::vandermonde_like(n, PrimeLaurent(1)));
    const PrimeLaurent norm = detail::multiplicity_factor(lambda);
    XPoly out(nv);
    const PrimeLaurent scale = PrimeLaurent::p_power(-shift);
    for (const auto &[e, c] : sym.terms()) {
        out.add_term(e, div_exact(c, norm) * scale);
    }
    return out;
}

// omega(pi_i^n(p)) = p^{-i(i+1)/2} s_i(x1..xn).
inline XPoly omega_pi(int i, int n)
{
    if (i < 1 || i > n) {
        throw IndexOutOfRange("omega_pi(" + std::to_string(i) + ", " + std::to_string(n) + ")");
    }
    return elem(i, n) * PrimeLaurent::p_power(-i * (i + 1) / 2);
}

// Omega(T(p)) = x0 * prod_{i=1}^n (1 + x_i).
inline XPoly sp_image_Tp(int n)
{
    if (n < 1) {
        throw IndexOutOfRange("sp_image_Tp needs n >= 1");
    }
    XPoly r = XPoly::variable(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        r *= XPoly::constant(n + 1, PrimeLaurent(1)) + XPoly::variable(n + 1, i);
    }
    return r;
}

// Signature (2^b, 1^a, 0^{n-a-b}) of pi_{a,b}.
inline Signature pi_ab_signature(int a, int b, int n)
{
    std::vector<int> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(b), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(a), 1);
    parts.insert(parts.end(), static_cast<std::size_t>(n - a - b), 0);
    return Signature(parts);
}

// Omega(T_i(p^2)) = sum_{a+b<=n, a>=i} p^{b(a+b+1)} sm(a-i, a) x0^2 omega(pi_{a,b}).
inline XPoly sp_image_Ti(int i, int n)
{
    if (n < 1 || i < 1 || i > n) {
        throw IndexOutOfRange("sp_image_Ti(" + std::to_string(i) + ", " + std::to_string(n) + ")");
    }
    Exponents x0sq(static_cast<std::size_t>(n + 1), 0);
    x0sq[0] = 2;
    XPoly r(n + 1);
    for (int a = i; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
            const PrimeLaurent c = PrimeLaurent::p_power(b * (a + b + 1)) * sm(a - i, a);
            r += omega_hl(pi_ab_signature(a, b, n), n).shifted(x0sq) * c;
        }
    }
    return r;
}

// Omega([p]_n) = p^{-n(n+1)/2} x0^2 x1...xn.
inline XPoly sp_image_pbracket(int n)
{
    if (n < 1) {
        throw IndexOutOfRange("sp_image_pbracket needs n >= 1");
    }
    Exponents e(static_cast<std::size_t>(n + 1), 1);
    e[0] = 2;
    return XPoly::monomial(e, PrimeLaurent::p_power(-n * (n + 1) / 2));
}

namespace detail
{

// Spherical images of T(p), T_1(p^2), T_2(p^2), [p]_3 for genus 3.
inline const std::array<XPoly, 4> &genus3_generator_images()
{
    static const std::array<XPoly, 4> images{sp_image_Tp(3), sp_image_Ti(1, 3), sp_image_Ti(2, 3),
                                             sp_image_pbracket(3)};
    return images;
}

} // namespace detail

// Omega extended as a ring homomorphism from generator polynomials.
inline XPoly hecke_image(const HeckeExpr &e, int n = 3)
{
    if (n != 3) {
        throw IndexOutOfRange("hecke_image is wired for genus 3 only");
    }
    const auto &gens = detail::genus3_generator_images();
    XPoly r(n + 1);
    for (const auto &[m, c] : e.terms()) {
        XPoly term = XPoly::constant(n + 1, c);
        for (std::size_t g = 0; g < 4; ++g) {
            if (m.exps[g] > 0) {
                term *= gens[g].pow(static_cast<unsigned>(m.exps[g]));
            }
        }
        r += term;
    }
    return r;
}

} // namespace hecke
