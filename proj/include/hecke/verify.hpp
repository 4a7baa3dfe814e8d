#pragma once

// End-to-end verification of every reference identity. Shared by the CLI
// (`verify-all`) and the acceptance test binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <hecke/cosets.hpp>
#include <hecke/reference.hpp>
#include <hecke/render.hpp>
#include <hecke/series.hpp>
#include <hecke/spherical.hpp>
#include <hecke/symmetric.hpp>

namespace hecke::verify
{

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail
{

// Accumulates failure messages; a check passes iff none were recorded.
class Failures
{
public:
    void expect(bool ok, const std::string &what)
    {
        if (!ok) {
            msgs_.push_back(what);
        }
    }
    bool ok() const
    {
        return msgs_.empty();
    }
    std::string summary(const std::string &success) const
    {
        if (msgs_.empty()) {
            return success;
        }
        std::string s;
        for (std::size_t i = 0; i < msgs_.size() && i < 5; ++i) {
            s += (i ? "; " : "") + msgs_[i];
        }
        if (msgs_.size() > 5) {
            s += "; ... (" + std::to_string(msgs_.size()) + " failures)";
        }
        return s;
    }

private:
    std::vector<std::string> msgs_;
};

// All non-increasing tuples of length n with parts <= max_part.
inline std::vector<Signature> signatures(int n, int max_part)
{
    std::vector<Signature> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (int x = 0; x <= hi; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(max_part);
    return out;
}

// msym via the coefficient of t in prod_{sigma in S_3} (1 + t x^{sigma(sig)}),
// normalised by its leading coefficient. Works in five variables, t = x4.
inline XPoly msym_by_generating_function(const Signature &sig)
{
    constexpr int nv = 5;
    std::vector<int> perm{0, 1, 2};
    XPoly prod = XPoly::constant(nv, PrimeLaurent(1));
    do {
        Exponents e(nv, 0);
        for (int i = 0; i < 3; ++i) {
            e[static_cast<std::size_t>(i + 1)] = sig[perm[static_cast<std::size_t>(i)]];
        }
        e[4] = 1;
        prod *= XPoly::constant(nv, PrimeLaurent(1)) + XPoly::monomial(e, PrimeLaurent(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    const XPoly linear = prod.slice(4, 1);
    XPoly out(4);
    const PrimeLaurent lead = linear.leading_term().second;
    for (const auto &[e, c] : linear.terms()) {
        out.add_term(Exponents(e.begin(), e.begin() + 4), div_exact(c, lead));
    }
    return out;
}

inline PrimeLaurent random_laurent(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> nterms(0, 3), exp(-3, 3), num(-5, 5), den(1, 3);
    PrimeLaurent r;
    for (int i = nterms(rng); i > 0; --i) {
        r.add_term(exp(rng), make_rational(num(rng), den(rng)));
    }
    return r;
}

inline XPoly random_xpoly(std::mt19937 &rng, int nvars, int max_deg, int max_terms)
{
    std::uniform_int_distribution<int> nterms(0, max_terms), deg(0, max_deg);
    XPoly r(nvars);
    for (int i = nterms(rng); i > 0; --i) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto &x : e) {
            x = deg(rng);
        }
        r.add_term(std::move(e), random_laurent(rng));
    }
    return r;
}

template <class F>
CheckResult timed(int id, std::string name, double limit_seconds, F &&body)
{
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Failures f;
        std::string ok_msg = body(f);
        r.passed = f.ok();
        r.detail = f.summary(ok_msg);
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && r.seconds >= limit_seconds) {
        r.passed = false;
        r.detail += "; runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(limit_seconds) + " s";
    }
    return r;
}

} // namespace detail

inline CheckResult golden_omega_table()
{
    return detail::timed(1, "golden omega table (28 values)", 5.0, [](detail::Failures &f) {
        const auto table = reference::omega_table();
        for (const auto &entry : table) {
            const XPoly got = omega_hl(entry.lambda, 3);
            f.expect(got == reference::build(entry.value),
                     "item " + std::to_string(entry.item) + " " + entry.lambda.str() + ": got " + render_symmetric(got));
        }
        return std::to_string(table.size()) + " items match";
    });
}

inline CheckResult oracle_equivalence()
{
    return detail::timed(2, "closed form vs coset enumeration", 60.0, [](detail::Failures &f) {
        int compared = 0;
        auto run = [&](int n, int max_part, std::initializer_list<std::int64_t> primes) {
            for (const auto &sig : detail::signatures(n, max_part)) {
                const XPoly closed = omega_hl(sig, n);
                for (auto q : primes) {
                    const XPoly oracle = omega_cosets(sig, n, q);
                    f.expect(closed.at_prime(Rational(static_cast<long>(q))) == oracle,
                             "n=" + std::to_string(n) + " " + sig.str() + " prime " + std::to_string(q));
                    ++compared;
                }
            }
        };
        run(3, 3, {2, 3});
        run(1, 4, {2, 3, 5});
        run(2, 4, {2, 3, 5});
        return std::to_string(compared) + " (signature, prime) pairs agree";
    });
}

inline CheckResult sp_images()
{
    return detail::timed(3, "symplectic generator images", 0, [](detail::Failures &f) {
        f.expect(sm(1, 3) == reference::sm_1_3(), "sm(1,3)");
        f.expect(sp_image_Tp(3) == reference::image_Tp(), "Omega(T(p))");
        f.expect(sp_image_Ti(1, 3) == reference::image_T1(), "Omega(T_1(p^2))");
        f.expect(sp_image_Ti(2, 3) == reference::image_T2(), "Omega(T_2(p^2))");
        f.expect(sp_image_Ti(3, 3) == reference::image_T3(), "Omega(T_3(p^2))");
        f.expect(sp_image_pbracket(3) == reference::image_T3(), "Omega([p]_3)");
        return std::string("Omega(T(p)), Omega(T_i(p^2)) i=1..3, Omega([p]_3), sm(1,3) match");
    });
}

inline CheckResult numerator_identity()
{
    return detail::timed(4, "R_3 * Q_3 = P_3 (order 12) and closed form", 0, [](detail::Failures &f) {
        const VSeries prod = r_series(3, kDefaultOrder) * q_poly(3, kDefaultOrder);
        const auto expected = reference::p3_numerator();
        for (int k = 0; k <= kDefaultOrder; ++k) {
            const XPoly want = k < static_cast<int>(expected.size()) ? expected[static_cast<std::size_t>(k)] : XPoly(4);
            f.expect(prod[k] == want, "R_3 Q_3 coefficient of v^" + std::to_string(k));
        }
        const VSeries closed = p3_closed_form(kDefaultOrder, kDefaultOrder);
        for (int k = 0; k <= kDefaultOrder; ++k) {
            f.expect(closed[k] == prod[k], "closed form coefficient of v^" + std::to_string(k));
        }
        return std::string("v^0..v^6 match, v^7..v^12 vanish, closed form agrees");
    });
}

inline CheckResult low_genus()
{
    return detail::timed(5, "genus 1 and 2 numerators", 0, [](detail::Failures &f) {
        const VSeries p1 = p_numerator(1, 8);
        f.expect(p1 == VSeries::one(2, 0), "P_1 != 1");
        const VSeries p2 = p_numerator(2, 10);
        VSeries want = VSeries::one(3, 2);
        want.set(2, XPoly::monomial({2, 1, 1}, -PrimeLaurent::p_power(-1)));
        f.expect(p2 == want, "P_2 != 1 - x0^2 x1 x2 v^2 / p");
        return std::string("P_1 = 1, P_2 = 1 - x0^2 x1 x2 v^2/p");
    });
}

// (-1)^{n-1} p^{n(n+1)2^{n-2} - n^2} [p]^{2^{n-1}-1}.
inline HeckeExpr leading_term_formula(int n)
{
    const int pexp = n * (n + 1) * (1 << n) / 4 - n * n;
    const int bracket = (1 << (n - 1)) - 1;
    const int sign = n % 2 == 1 ? 1 : -1;
    return HeckeExpr::term(gen_monomial(0, 0, 0, bracket), PrimeLaurent::p_power(pexp) * PrimeLaurent(sign));
}

inline CheckResult theorem1()
{
    return detail::timed(6, "P_3 over the Hecke ring", 0, [](detail::Failures &f) {
        const HeckePolynomial u = p3_in_generators();
        const VSeries p3 = p_numerator(3, kDefaultOrder);
        const auto expected = reference::p3_generators();
        f.expect(u.size() == expected.size(), "degree of P_3");
        for (std::size_t j = 0; j < u.size() && j < expected.size(); ++j) {
            f.expect(u[j] == expected[j], "u_" + std::to_string(j) + " = " + render_hecke(u[j]));
            f.expect(hecke_image(u[j]) == p3[static_cast<int>(j)], "Omega(u_" + std::to_string(j) + ")");
        }
        f.expect(u.back() == leading_term_formula(3), "leading term vs general formula");
        return std::string("u_0..u_6 match, leading term p^15 [p]_3^3");
    });
}

inline CheckResult k_table()
{
    return detail::timed(7, "K coefficients of Q_3", 0, [](detail::Failures &f) {
        const VSeries q = q_poly(3);
        std::array<HeckeExpr, 5> solved;
        for (int j = 2; j <= 4; ++j) {
            solved[static_cast<std::size_t>(j)] = express_in_generators(q[j], j);
        }
        const auto ks = reference::k_values();
        for (const auto &k : ks) {
            const PrimeLaurent got = solved[static_cast<std::size_t>(k.v_power)].coeff(k.monomial);
            f.expect(got == k.value, k.name + " = " + got.str());
        }
        // No monomial outside the named ansatz may carry a coefficient.
        for (int j = 2; j <= 4; ++j) {
            for (const auto &[m, c] : solved[static_cast<std::size_t>(j)].terms()) {
                bool named = false;
                for (const auto &k : ks) {
                    named = named || (k.v_power == j && k.monomial == m);
                }
                f.expect(named, "unnamed monomial at v^" + std::to_string(j));
            }
        }
        return std::to_string(ks.size()) + " K values match";
    });
}

inline CheckResult functional_equation()
{
    return detail::timed(8, "Q_3 over the Hecke ring and functional equation", 0, [](detail::Failures &f) {
        const QCoefficients t = q3_in_generators();
        const VSeries q = q_poly(3);
        const auto display = reference::q3_image();
        f.expect(functional_eq_check(t), "functional equation");
        for (int j = 0; j <= 8; ++j) {
            f.expect(hecke_image(t.t[static_cast<std::size_t>(j)]) == q[j], "Omega(t_" + std::to_string(j) + ")");
            f.expect(q[j] == display[static_cast<std::size_t>(j)], "Omega(Q_3) display at v^" + std::to_string(j));
        }
        f.expect(t.t[1] == -HeckeExpr::Tp(), "t_1 = -T(p)");
        f.expect(t.t[7] == reference::q3_t7(), "t_7");
        f.expect(t.t[8] == reference::q3_t8(), "t_8");
        return std::string("t_0..t_8 consistent with Omega(Q_3) and t_{8-i} = (p^6[p]_3)^{4-i} t_i");
    });
}

inline CheckResult specialization()
{
    return detail::timed(9, "nu-specialisation of P_3", 0, [](detail::Failures &f) {
        const VSeries nu = specialize_nu(p_numerator(3, kDefaultOrder));
        const auto expanded = reference::p3_nu_expanded();
        VSeries expected(4, 6);
        for (int k = 0; k <= 6; ++k) {
            expected.set(k, XPoly::constant(4, expanded[static_cast<std::size_t>(k)]));
        }
        f.expect(nu == expected, "expanded form");
        VSeries product = VSeries::one(4, 6);
        for (const auto &factor : reference::p3_nu_factors()) {
            std::vector<XPoly> coeffs;
            for (const auto &c : factor) {
                coeffs.push_back(XPoly::constant(4, c));
            }
            product = product * VSeries(4, 6, coeffs);
        }
        f.expect(product == expected, "five-factor product differs from the expanded form");
        f.expect(product == nu, "five-factor product differs from nu(P_3)");
        return std::string("nu(P_3) equals the expanded polynomial and the five-factor product");
    });
}

inline CheckResult property_suites()
{
    return detail::timed(10, "property suites", 0, [](detail::Failures &f) {
        for (const auto &sig : detail::signatures(3, 6)) {
            const XPoly m = msym(sig, 3);
            const MsymDecomposition d = to_msym(m);
            f.expect(d.size() == 1 && d.begin()->first == MsymKey{0, sig} && d.begin()->second.is_one(),
                     "to_msym(msym" + sig.str() + ")");
            f.expect(detail::msym_by_generating_function(sig) == m, "generating function for " + sig.str());
        }
        std::mt19937 rng(20240611U);
        for (int trial = 0; trial < 25; ++trial) {
            VSeries a = VSeries::one(4, 6);
            for (int k = 1; k <= 6; ++k) {
                a.set(k, detail::random_xpoly(rng, 4, 2, 3));
            }
            f.expect(recip(a) * a == VSeries::one(4, 6), "recip(a) * a != 1, trial " + std::to_string(trial));
        }
        for (int trial = 0; trial < 25; ++trial) {
            const XPoly a = detail::random_xpoly(rng, 4, 2, 4);
            const XPoly b = detail::random_xpoly(rng, 4, 2, 4);
            std::map<int, XPoly> assignment;
            for (int v = 0; v < 4; ++v) {
                assignment.emplace(v, detail::random_xpoly(rng, 3, 2, 3));
            }
            f.expect(substitute(a * b, assignment) == substitute(a, assignment) * substitute(b, assignment),
                     "substitution homomorphism, trial " + std::to_string(trial));
        }
        return std::string("msym round trip and generating function (84 signatures), recip, substitution");
    });
}

inline std::vector<std::function<CheckResult()>> all_checks()
{
    return {golden_omega_table, oracle_equivalence, sp_images,        numerator_identity, low_genus,
            theorem1,           k_table,            functional_equation, specialization,  property_suites};
}

inline std::string format_result(const CheckResult &r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  AC" << r.id << "  " << r.name << "  -- " << r.detail;
    return os.str();
}

} // namespace hecke::verify
