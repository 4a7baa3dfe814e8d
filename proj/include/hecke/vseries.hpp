#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

// Power series in v with XPoly coefficients, truncated after v^order.
class VSeries
{
public:
    VSeries(int nvars, int order) : nvars_(nvars), coeffs_(static_cast<std::size_t>(order + 1), XPoly(nvars))
    {
        if (order < 0) {
            throw IndexOutOfRange("negative truncation order");
        }
    }
    // Polynomial in v given by its coefficients, truncated at `order`.
    VSeries(int nvars, int order, const std::vector<XPoly> &coeffs) : VSeries(nvars, order)
    {
        for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
            set(static_cast<int>(k), coeffs[k]);
        }
    }

    static VSeries one(int nvars, int order)
    {
        VSeries r(nvars, order);
        r.coeffs_[0] = XPoly::constant(nvars, PrimeLaurent(1));
        return r;
    }

    int nvars() const noexcept
    {
        return nvars_;
    }
    int order() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const XPoly &operator[](int k) const
    {
        return coeffs_.at(static_cast<std::size_t>(k));
    }
    const std::vector<XPoly> &coeffs() const noexcept
    {
        return coeffs_;
    }
    void set(int k, XPoly c)
    {
        if (c.nvars() != nvars_) {
            throw VarMismatch("series coefficient nvars");
        }
        coeffs_.at(static_cast<std::size_t>(k)) = std::move(c);
    }
    void add_to(int k, const XPoly &c)
    {
        if (k <= order()) {
            coeffs_[static_cast<std::size_t>(k)] += c;
        }
    }

    // Highest k with a nonzero coefficient, or -1 for the zero series.
    int degree() const
    {
        for (int k = order(); k >= 0; --k) {
            if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) {
                return k;
            }
        }
        return -1;
    }

    VSeries truncated(int order) const
    {
        VSeries r(nvars_, std::min(order, this->order()));
        for (int k = 0; k <= r.order(); ++k) {
            r.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    friend VSeries operator+(const VSeries &a, const VSeries &b)
    {
        a.check_vars(b);
        VSeries r = a.truncated(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            r.coeffs_[static_cast<std::size_t>(k)] += b[k];
        }
        return r;
    }
    friend VSeries operator-(const VSeries &a, const VSeries &b)
    {
        a.check_vars(b);
        VSeries r = a.truncated(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            r.coeffs_[static_cast<std::size_t>(k)] -= b[k];
        }
        return r;
    }
    // Cauchy product; the result is known only to the smaller order.
    friend VSeries operator*(const VSeries &a, const VSeries &b)
    {
        a.check_vars(b);
        const int n = std::min(a.order(), b.order());
        VSeries r(a.nvars_, n);
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!b[j].is_zero()) {
                    r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
                }
            }
        }
        return r;
    }
    friend bool operator==(const VSeries &a, const VSeries &b)
    {
        return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
    }

    void check_vars(const VSeries &o) const
    {
        if (o.nvars_ != nvars_) {
            throw VarMismatch("series nvars " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
        }
    }

private:
    int nvars_;
    std::vector<XPoly> coeffs_;
};

// Multiplicative inverse to the same order. The constant term must be 1.
inline VSeries recip(const VSeries &a)
{
    const int nv = a.nvars();
    if (!(a[0] == XPoly::constant(nv, PrimeLaurent(1)))) {
        throw NonUnitConstantTerm("series constant term is not 1");
    }
    VSeries b = VSeries::one(nv, a.order());
    // b_k = -sum_{j=1..k} a_j b_{k-j}
    for (int k = 1; k <= a.order(); ++k) {
        XPoly acc(nv);
        for (int j = 1; j <= k; ++j) {
            if (!a[j].is_zero() && !b[k - j].is_zero()) {
                acc -= a[j] * b[k - j];
            }
        }
        b.set(k, std::move(acc));
    }
    return b;
}

// The linear factor (1 - c*v) as a series of the given order.
inline VSeries one_minus(const XPoly &c, int order)
{
    VSeries r = VSeries::one(c.nvars(), order);
    if (order >= 1) {
        r.set(1, -c);
    }
    return r;
}

} // namespace hecke
