#pragma once

#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <hecke/laurent.hpp>

namespace hecke
{

// Exponents (a, b, c, d) of the commuting generator monomial
// T(p)^a * T_1(p^2)^b * T_2(p^2)^c * [p]_3^d.
struct GenMonomial {
    std::array<int, 4> exps{};

    // x0-weight of the spherical image: T(p) has weight 1, the others 2.
    int x0_weight() const
    {
        return exps[0] + 2 * (exps[1] + exps[2] + exps[3]);
    }
    int degree() const
    {
        return std::accumulate(exps.begin(), exps.end(), 0);
    }

    friend GenMonomial operator*(const GenMonomial &a, const GenMonomial &b)
    {
        GenMonomial r;
        for (std::size_t i = 0; i < 4; ++i) {
            r.exps[i] = a.exps[i] + b.exps[i];
        }
        return r;
    }
    // Total degree, then tuple lexicographic.
    friend std::strong_ordering operator<=>(const GenMonomial &a, const GenMonomial &b)
    {
        if (a.degree() != b.degree()) {
            return a.degree() <=> b.degree();
        }
        return a.exps <=> b.exps;
    }
    friend bool operator==(const GenMonomial &, const GenMonomial &) = default;
};

enum class Generator { Tp = 0, T1 = 1, T2 = 2, Pbracket = 3 };

inline GenMonomial gen_monomial(int a, int b, int c, int d)
{
    return GenMonomial{{a, b, c, d}};
}

// Polynomial in T(p), T_1(p^2), T_2(p^2), [p]_3 with Laurent coefficients.
class HeckeExpr
{
public:
    using Terms = std::map<GenMonomial, PrimeLaurent>;

    HeckeExpr() = default;
    HeckeExpr(const PrimeLaurent &c) // NOLINT: scalar embedding
    {
        add_term(GenMonomial{}, c);
    }
    HeckeExpr(int c) : HeckeExpr(PrimeLaurent(c)) {} // NOLINT

    static HeckeExpr generator(Generator g)
    {
        GenMonomial m;
        m.exps[static_cast<std::size_t>(g)] = 1;
        HeckeExpr r;
        r.add_term(m, PrimeLaurent(1));
        return r;
    }
    static HeckeExpr term(const GenMonomial &m, const PrimeLaurent &c)
    {
        HeckeExpr r;
        r.add_term(m, c);
        return r;
    }
    static HeckeExpr Tp()
    {
        return generator(Generator::Tp);
    }
    static HeckeExpr T1()
    {
        return generator(Generator::T1);
    }
    static HeckeExpr T2()
    {
        return generator(Generator::T2);
    }
    static HeckeExpr pbracket()
    {
        return generator(Generator::Pbracket);
    }

    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    PrimeLaurent coeff(const GenMonomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? PrimeLaurent{} : it->second;
    }

    void add_term(const GenMonomial &m, const PrimeLaurent &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    HeckeExpr &operator+=(const HeckeExpr &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    HeckeExpr &operator-=(const HeckeExpr &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    friend HeckeExpr operator+(HeckeExpr a, const HeckeExpr &b)
    {
        return a += b;
    }
    friend HeckeExpr operator-(HeckeExpr a, const HeckeExpr &b)
    {
        return a -= b;
    }
    friend HeckeExpr operator-(const HeckeExpr &a)
    {
        return HeckeExpr{} - a;
    }
    friend HeckeExpr operator*(const HeckeExpr &a, const HeckeExpr &b)
    {
        HeckeExpr r;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const HeckeExpr &a, const HeckeExpr &b)
    {
        return a.terms_ == b.terms_;
    }

    HeckeExpr pow(unsigned k) const
    {
        HeckeExpr r(1);
        for (unsigned i = 0; i < k; ++i) {
            r = r * *this;
        }
        return r;
    }

private:
    Terms terms_;
};

// Coefficients u_0..u_d of a polynomial in v over the Hecke ring.
using HeckePolynomial = std::vector<HeckeExpr>;

} // namespace hecke
