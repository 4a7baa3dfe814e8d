#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <hecke/errors.hpp>

namespace hecke
{

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Rational in reduced "num/den" form; the denominator is always written.
inline std::string rational_to_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string &s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw ParseError("bad rational '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
}

namespace detail
{

// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using DensePoly = std::vector<Rational>;

inline void trim(DensePoly &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Long division a = q*b + r with deg r < deg b. b must be nonzero.
inline std::pair<DensePoly, DensePoly> poly_divmod(DensePoly a, const DensePoly &b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        return {DensePoly{}, a};
    }
    DensePoly q(a.size() - db, Rational(0));
    const Rational &lead = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) {
            continue;
        }
        Rational c = a[k] / lead;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            a[k - db + j] -= c * b[j];
        }
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

// Monic gcd over Q.
inline DensePoly poly_gcd(DensePoly a, DensePoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto &c : a) {
            c /= lead;
        }
    }
    return a;
}

} // namespace detail

// Laurent polynomial in the formal prime p with rational coefficients.
// Canonical: no stored coefficient is zero.
class PrimeLaurent
{
public:
    using Terms = std::map<int, Rational>;

    PrimeLaurent() = default;
    PrimeLaurent(const Rational &c) // NOLINT: implicit scalar embedding
    {
        if (c != 0) {
            terms_.emplace(0, c);
        }
    }
    PrimeLaurent(long c) : PrimeLaurent(Rational(c)) {} // NOLINT
    PrimeLaurent(int c) : PrimeLaurent(Rational(c)) {}  // NOLINT

    static PrimeLaurent monomial(const Rational &c, int exp)
    {
        PrimeLaurent r;
        if (c != 0) {
            r.terms_.emplace(exp, c);
        }
        return r;
    }
    static PrimeLaurent p_power(int exp)
    {
        return monomial(Rational(1), exp);
    }
    static PrimeLaurent p()
    {
        return p_power(1);
    }
    // Coefficients listed from the highest power down, the lowest term at p^low.
    // from_desc({2, -1, -1}, -6) is (2p^2 - p - 1)/p^6.
    static PrimeLaurent from_desc(std::initializer_list<long> coeffs, int low = 0)
    {
        PrimeLaurent r;
        int e = low + static_cast<int>(coeffs.size()) - 1;
        for (long c : coeffs) {
            r.add_term(e--, Rational(c));
        }
        return r;
    }
    static PrimeLaurent from_terms(const Terms &t)
    {
        PrimeLaurent r;
        for (const auto &[e, c] : t) {
            r.add_term(e, c);
        }
        return r;
    }

    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_one() const
    {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_monomial() const noexcept
    {
        return terms_.size() == 1;
    }
    Rational constant_term() const
    {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int min_exp() const
    {
        return terms_.empty() ? 0 : terms_.begin()->first;
    }
    int max_exp() const
    {
        return terms_.empty() ? 0 : terms_.rbegin()->first;
    }
    const Rational &leading_coeff() const
    {
        return terms_.rbegin()->second;
    }

    void add_term(int exp, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    PrimeLaurent &operator+=(const PrimeLaurent &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    PrimeLaurent &operator-=(const PrimeLaurent &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    PrimeLaurent &operator*=(const PrimeLaurent &o)
    {
        *this = *this * o;
        return *this;
    }
    friend PrimeLaurent operator+(PrimeLaurent a, const PrimeLaurent &b)
    {
        return a += b;
    }
    friend PrimeLaurent operator-(PrimeLaurent a, const PrimeLaurent &b)
    {
        return a -= b;
    }
    friend PrimeLaurent operator-(PrimeLaurent a)
    {
        for (auto &[e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend PrimeLaurent operator*(const PrimeLaurent &a, const PrimeLaurent &b)
    {
        PrimeLaurent r;
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        // Monomial fast path; very common for p-power scalings.
        if (b.is_monomial()) {
            const auto &[eb, cb] = *b.terms_.begin();
            for (const auto &[ea, ca] : a.terms_) {
                r.terms_.emplace_hint(r.terms_.end(), ea + eb, ca * cb);
            }
            return r;
        }
        if (a.is_monomial()) {
            return b * a;
        }
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const PrimeLaurent &a, const PrimeLaurent &b)
    {
        return a.terms_ == b.terms_;
    }

    PrimeLaurent pow(unsigned k) const
    {
        PrimeLaurent r(1), base = *this;
        while (k != 0) {
            if (k & 1U) {
                r *= base;
            }
            k >>= 1U;
            if (k != 0) {
                base *= base;
            }
        }
        return r;
    }

    // p -> p^-1.
    PrimeLaurent invert_p() const
    {
        PrimeLaurent r;
        for (const auto &[e, c] : terms_) {
            r.terms_.emplace(-e, c);
        }
        return r;
    }

    Rational evaluate(const Rational &prime) const
    {
        Rational acc(0);
        for (const auto &[e, c] : terms_) {
            Rational pw(1);
            for (int i = 0; i < (e < 0 ? -e : e); ++i) {
                pw *= prime;
            }
            if (e < 0) {
                acc += c / pw;
            } else {
                acc += c * pw;
            }
        }
        return acc;
    }

    // Split as p^shift * poly(p) with poly(0) != 0.
    std::pair<int, detail::DensePoly> to_shifted_poly() const
    {
        detail::DensePoly d;
        if (terms_.empty()) {
            return {0, d};
        }
        const int lo = min_exp();
        d.assign(static_cast<std::size_t>(max_exp() - lo + 1), Rational(0));
        for (const auto &[e, c] : terms_) {
            d[static_cast<std::size_t>(e - lo)] = c;
        }
        return {lo, d};
    }
    static PrimeLaurent from_shifted_poly(int shift, const detail::DensePoly &d)
    {
        PrimeLaurent r;
        for (std::size_t i = 0; i < d.size(); ++i) {
            r.add_term(shift + static_cast<int>(i), d[i]);
        }
        return r;
    }

    // Human-readable form like "2*p^2-p-1" or "p^-3"; used for diagnostics.
    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto &[e, c] = *it;
            Rational mag = abs(c);
            if (c < 0) {
                os << "-";
            } else if (!first) {
                os << "+";
            }
            first = false;
            const bool unit = mag == 1;
            if (e == 0) {
                os << mag.get_str();
                continue;
            }
            if (!unit) {
                os << mag.get_str() << "*";
            }
            os << "p";
            if (e != 1) {
                os << "^" << e;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

// Exact quotient in the Laurent ring; throws NotDivisible when none exists.
inline PrimeLaurent div_exact(const PrimeLaurent &a, const PrimeLaurent &b)
{
    if (b.is_zero()) {
        throw DivisionByZero("Laurent division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    if (b.is_monomial()) {
        const auto &[eb, cb] = *b.terms().begin();
        PrimeLaurent r;
        for (const auto &[ea, ca] : a.terms()) {
            r.add_term(ea - eb, ca / cb);
        }
        return r;
    }
    auto [sa, pa] = a.to_shifted_poly();
    auto [sb, pb] = b.to_shifted_poly();
    auto [q, rem] = detail::poly_divmod(pa, pb);
    if (!rem.empty()) {
        throw NotDivisible("(" + a.str() + ") / (" + b.str() + ")");
    }
    return PrimeLaurent::from_shifted_poly(sa - sb, q);
}

} // namespace hecke
