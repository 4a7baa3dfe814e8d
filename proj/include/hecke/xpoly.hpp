#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/laurent.hpp>

namespace hecke
{

// Exponent vector (e0, e1, ..., e_{nvars-1}) of a monomial x0^e0 x1^e1 ...
using Exponents = std::vector<int>;

inline int total_degree(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic, descending: larger total degree first, ties broken
// lexicographically with x0 most significant.
struct GrlexGreater {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return b < a;
    }
};

// Sparse polynomial in x0..x_{nvars-1} over PrimeLaurent.
class XPoly
{
public:
    using Terms = std::map<Exponents, PrimeLaurent, GrlexGreater>;

    explicit XPoly(int nvars = 0) : nvars_(nvars) {}

    static XPoly constant(int nvars, const PrimeLaurent &c)
    {
        XPoly r(nvars);
        r.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return r;
    }
    static XPoly variable(int nvars, int index)
    {
        if (index < 0 || index >= nvars) {
            throw IndexOutOfRange("variable x" + std::to_string(index) + " with nvars=" + std::to_string(nvars));
        }
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(index)] = 1;
        XPoly r(nvars);
        r.add_term(std::move(e), PrimeLaurent(1));
        return r;
    }
    static XPoly monomial(Exponents e, const PrimeLaurent &c)
    {
        XPoly r(static_cast<int>(e.size()));
        r.add_term(std::move(e), c);
        return r;
    }

    int nvars() const noexcept
    {
        return nvars_;
    }
    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    PrimeLaurent constant_term() const
    {
        auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
        return it == terms_.end() ? PrimeLaurent{} : it->second;
    }
    // Coefficient of a given monomial (zero if absent).
    PrimeLaurent coeff(const Exponents &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? PrimeLaurent{} : it->second;
    }
    const std::pair<const Exponents, PrimeLaurent> &leading_term() const
    {
        return *terms_.begin();
    }

    void add_term(Exponents e, const PrimeLaurent &c)
    {
        if (static_cast<int>(e.size()) != nvars_) {
            throw VarMismatch("exponent vector of length " + std::to_string(e.size()) + " in polynomial with nvars=" +
                              std::to_string(nvars_));
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    XPoly &operator+=(const XPoly &o)
    {
        check_vars(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    XPoly &operator-=(const XPoly &o)
    {
        check_vars(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    XPoly &operator*=(const PrimeLaurent &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) {
            c *= s;
        }
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly &b)
    {
        return a += b;
    }
    friend XPoly operator-(XPoly a, const XPoly &b)
    {
        return a -= b;
    }
    friend XPoly operator-(XPoly a)
    {
        for (auto &[e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend XPoly operator*(XPoly a, const PrimeLaurent &s)
    {
        return a *= s;
    }
    friend XPoly operator*(const PrimeLaurent &s, XPoly a)
    {
        return a *= s;
    }
    friend XPoly operator*(const XPoly &a, const XPoly &b)
    {
        a.check_vars(b);
        XPoly r(a.nvars_);
        Exponents e(static_cast<std::size_t>(a.nvars_));
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    XPoly &operator*=(const XPoly &o)
    {
        *this = *this * o;
        return *this;
    }
    friend bool operator==(const XPoly &a, const XPoly &b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    XPoly pow(unsigned k) const
    {
        XPoly r = constant(nvars_, PrimeLaurent(1));
        for (unsigned i = 0; i < k; ++i) {
            r *= *this;
        }
        return r;
    }

    // Multiply by the monomial x^shift.
    XPoly shifted(const Exponents &shift) const
    {
        XPoly r(nvars_);
        for (const auto &[e, c] : terms_) {
            Exponents ne = e;
            for (std::size_t i = 0; i < ne.size(); ++i) {
                ne[i] += shift[i];
            }
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    // Rename variables: x_i -> x_{perm[i]}.
    XPoly permuted(std::span<const int> perm) const
    {
        XPoly r(nvars_);
        Exponents ne(static_cast<std::size_t>(nvars_));
        for (const auto &[e, c] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                ne[static_cast<std::size_t>(perm[i])] = e[i];
            }
            r.terms_.emplace(ne, c);
        }
        return r;
    }

    // Specialise p to a concrete number; coefficients become constant Laurent.
    XPoly at_prime(const Rational &prime) const
    {
        XPoly r(nvars_);
        for (const auto &[e, c] : terms_) {
            r.add_term(e, PrimeLaurent(c.evaluate(prime)));
        }
        return r;
    }

    // Terms whose exponent of variable `var` equals `deg`.
    XPoly slice(int var, int deg) const
    {
        XPoly r(nvars_);
        for (const auto &[e, c] : terms_) {
            if (e[static_cast<std::size_t>(var)] == deg) {
                r.terms_.emplace(e, c);
            }
        }
        return r;
    }

    void check_vars(const XPoly &o) const
    {
        if (o.nvars_ != nvars_) {
            throw VarMismatch("nvars " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
        }
    }

private:
    int nvars_;
    Terms terms_;
};

// Exact quotient q with q*b == a, by repeated leading-term cancellation in the
// grlex order. Any leftover means b does not divide a.
inline XPoly div_exact(const XPoly &a, const XPoly &b)
{
    a.check_vars(b);
    if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    const auto &[lb_exp, lb_coeff] = b.leading_term();
    XPoly rem = a;
    XPoly q(a.nvars());
    Exponents qe(static_cast<std::size_t>(a.nvars()));
    Exponents te(static_cast<std::size_t>(a.nvars()));
    while (!rem.is_zero()) {
        const auto &[le, lc] = rem.leading_term();
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = le[i] - lb_exp[i];
            if (qe[i] < 0) {
                throw NotDivisible("leading monomial not divisible");
            }
        }
        PrimeLaurent qc = div_exact(lc, lb_coeff);
        for (const auto &[eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < te.size(); ++i) {
                te[i] = eb[i] + qe[i];
            }
            rem.add_term(te, -(qc * cb));
        }
        q.add_term(qe, qc);
    }
    return q;
}

// Image under the ring homomorphism x_i -> assignment[i]. Every variable that
// occurs in `a` must be assigned; all images must share one nvars.
inline XPoly substitute(const XPoly &a, const std::map<int, XPoly> &assignment)
{
    int out_vars = a.nvars();
    if (!assignment.empty()) {
        out_vars = assignment.begin()->second.nvars();
        for (const auto &[v, img] : assignment) {
            if (img.nvars() != out_vars) {
                throw VarMismatch("substitution images disagree on nvars");
            }
        }
    }
    // Cache powers per variable.
    std::vector<std::vector<XPoly>> powers(static_cast<std::size_t>(a.nvars()));
    auto power = [&](int var, int k) -> const XPoly & {
        auto &cache = powers[static_cast<std::size_t>(var)];
        if (cache.empty()) {
            cache.push_back(XPoly::constant(out_vars, PrimeLaurent(1)));
        }
        while (static_cast<int>(cache.size()) <= k) {
            cache.push_back(cache.back() * assignment.at(var));
        }
        return cache[static_cast<std::size_t>(k)];
    };
    XPoly r(out_vars);
    for (const auto &[e, c] : a.terms()) {
        XPoly term = XPoly::constant(out_vars, c);
        for (int v = 0; v < a.nvars(); ++v) {
            const int k = e[static_cast<std::size_t>(v)];
            if (k == 0) {
                continue;
            }
            if (!assignment.contains(v)) {
                throw UnassignedVariable("x" + std::to_string(v));
            }
            term *= power(v, k);
        }
        r += term;
    }
    return r;
}

} // namespace hecke
