#pragma once

#include <string>
#include <utility>

#include <hecke/laurent.hpp>

namespace hecke
{

// Rational function in p. Only used as an intermediate (linear solves,
// normalisation factors); public results are converted back with to_laurent().
//
// Canonical form: den is a polynomial with nonzero constant term and leading
// coefficient 1, coprime to num; all powers of p live in num.
class PrimeRat
{
public:
    PrimeRat() : den_(1) {}
    PrimeRat(const PrimeLaurent &num) : num_(num), den_(1) {} // NOLINT
    PrimeRat(long c) : PrimeRat(PrimeLaurent(c)) {}           // NOLINT
    PrimeRat(const PrimeLaurent &num, const PrimeLaurent &den) : num_(num), den_(den)
    {
        if (den_.is_zero()) {
            throw DivisionByZero("PrimeRat with zero denominator");
        }
        normalize();
    }

    const PrimeLaurent &num() const noexcept
    {
        return num_;
    }
    const PrimeLaurent &den() const noexcept
    {
        return den_;
    }
    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_laurent() const
    {
        return den_.is_one();
    }
    PrimeLaurent to_laurent() const
    {
        if (!is_laurent()) {
            throw NotLaurent("(" + num_.str() + ")/(" + den_.str() + ")");
        }
        return num_;
    }

    friend PrimeRat operator+(const PrimeRat &a, const PrimeRat &b)
    {
        if (a.den_ == b.den_) {
            return PrimeRat(a.num_ + b.num_, a.den_);
        }
        return PrimeRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PrimeRat operator-(const PrimeRat &a, const PrimeRat &b)
    {
        return a + (-b);
    }
    friend PrimeRat operator-(const PrimeRat &a)
    {
        PrimeRat r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend PrimeRat operator*(const PrimeRat &a, const PrimeRat &b)
    {
        return PrimeRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PrimeRat operator/(const PrimeRat &a, const PrimeRat &b)
    {
        if (b.is_zero()) {
            throw DivisionByZero("PrimeRat division by zero");
        }
        return PrimeRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const PrimeRat &a, const PrimeRat &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const
    {
        if (is_laurent()) {
            return num_.str();
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = PrimeLaurent(1);
            return;
        }
        auto [sn, pn] = num_.to_shifted_poly();
        auto [sd, pd] = den_.to_shifted_poly();
        auto g = detail::poly_gcd(pn, pd);
        if (g.size() > 1) {
            pn = detail::poly_divmod(pn, g).first;
            pd = detail::poly_divmod(pd, g).first;
        }
        Rational lead = pd.back();
        for (auto &c : pn) {
            c /= lead;
        }
        for (auto &c : pd) {
            c /= lead;
        }
        num_ = PrimeLaurent::from_shifted_poly(sn - sd, pn);
        den_ = PrimeLaurent::from_shifted_poly(0, pd);
    }

    PrimeLaurent num_;
    PrimeLaurent den_;
};

} // namespace hecke
