#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

// Non-increasing tuple of non-negative integers (lambda_1 >= ... >= lambda_n >= 0).
class Signature
{
public:
    Signature() = default;
    explicit Signature(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
                throw IndexOutOfRange("signature " + str() + " is not non-increasing and non-negative");
            }
        }
    }
    Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}

    // Sorts an arbitrary multiset of exponents into a signature.
    static Signature sorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Signature(std::move(parts));
    }

    const std::vector<int> &parts() const noexcept
    {
        return parts_;
    }
    int length() const noexcept
    {
        return static_cast<int>(parts_.size());
    }
    int operator[](int i) const
    {
        return parts_.at(static_cast<std::size_t>(i));
    }
    int weight() const
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    bool is_zero() const
    {
        return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 0; });
    }
    // Multiplicity of each distinct part.
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int x : parts_) {
            ++m[x];
        }
        return m;
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(parts_[i]);
        }
        return s + "]";
    }

    // Degree first, then lexicographic ascending: sym[1,1,1] < sym[2,1,0].
    friend std::strong_ordering operator<=>(const Signature &a, const Signature &b)
    {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) {
            return wa <=> wb;
        }
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Signature &a, const Signature &b) = default;

private:
    std::vector<int> parts_;
};

// Monomial symmetric polynomial sym_sig in x1..xn (nvars = n + 1, x0 unused):
// the S_n-orbit sum of x1^{i1}...xn^{in}, each distinct monomial once.
inline XPoly msym(const Signature &sig, int n)
{
    if (sig.length() != n) {
        throw LengthMismatch("signature " + sig.str() + " has length " + std::to_string(sig.length()) +
                             ", expected " + std::to_string(n));
    }
    std::vector<int> parts = sig.parts();
    std::sort(parts.begin(), parts.end());
    XPoly r(n + 1);
    do {
        Exponents e(static_cast<std::size_t>(n + 1), 0);
        std::copy(parts.begin(), parts.end(), e.begin() + 1);
        r.add_term(std::move(e), PrimeLaurent(1));
    } while (std::next_permutation(parts.begin(), parts.end()));
    return r;
}

// Elementary symmetric polynomial s_i(x1..xn).
inline XPoly elem(int i, int n)
{
    if (i < 0 || i > n) {
        throw IndexOutOfRange("elem(" + std::to_string(i) + ", " + std::to_string(n) + ")");
    }
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::fill(parts.begin(), parts.begin() + i, 1);
    return msym(Signature(parts), n);
}

// Key of a monomial-basis decomposition: x0^x0_weight * sym_sig.
struct MsymKey {
    int x0_weight = 0;
    Signature sig;

    friend std::strong_ordering operator<=>(const MsymKey &a, const MsymKey &b)
    {
        if (a.x0_weight != b.x0_weight) {
            return a.x0_weight <=> b.x0_weight;
        }
        return a.sig <=> b.sig;
    }
    friend bool operator==(const MsymKey &, const MsymKey &) = default;
};

using MsymDecomposition = std::map<MsymKey, PrimeLaurent>;

// Writes a polynomial symmetric in x1..xn (x0 a spectator) in the monomial
// symmetric basis. Peels off the leading term repeatedly; a leading exponent
// that is not non-increasing in x1..xn certifies asymmetry.
inline MsymDecomposition to_msym(const XPoly &a)
{
    const int n = a.nvars() - 1;
    if (n < 0) {
        throw VarMismatch("to_msym needs at least x0");
    }
    MsymDecomposition out;
    XPoly rem = a;
    while (!rem.is_zero()) {
        const auto [e, c] = rem.leading_term();
        std::vector<int> parts(e.begin() + 1, e.end());
        if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
            throw NotSymmetric("leading monomial exponents are not non-increasing");
        }
        Signature sig(parts);
        Exponents shift(static_cast<std::size_t>(n + 1), 0);
        shift[0] = e[0];
        rem -= msym(sig, n).shifted(shift) * c;
        out.emplace(MsymKey{e[0], sig}, c);
    }
    return out;
}

// Inverse of to_msym.
inline XPoly from_msym(const MsymDecomposition &d, int n)
{
    XPoly r(n + 1);
    for (const auto &[key, c] : d) {
        Exponents shift(static_cast<std::size_t>(n + 1), 0);
        shift[0] = key.x0_weight;
        r += msym(key.sig, n).shifted(shift) * c;
    }
    return r;
}

} // namespace hecke
