#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/xpoly.hpp>

namespace hecke
{

// Upper-triangular Hermite-normal-form representative of a left coset
// GL_n(Z) g with diagonal (prime^{d_1}, ..., prime^{d_n}); entry (i, j), i < j,
// lies in [0, prime^{d_j}).
struct CosetMatrix {
    int n = 0;
    std::vector<int> diag_exps;
    std::vector<std::vector<std::int64_t>> entries; // full n x n matrix

    std::int64_t at(int i, int j) const
    {
        return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

namespace detail
{

inline bool is_prime(std::int64_t q)
{
    if (q < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

// Elementary divisors of a nonsingular integer matrix, in divisibility order.
inline std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m)
{
    const std::size_t n = m.size();
    for (std::size_t t = 0; t < n; ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        for (;;) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (m[i][j] != 0 &&
                        (pi == n || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n) {
                return {}; // singular
            }
            std::swap(m[t], m[pi]);
            for (auto &row : m) {
                std::swap(row[t], row[pj]);
            }
            bool clean = true;
            const std::int64_t piv = m[t][t];
            for (std::size_t i = t + 1; i < n; ++i) {
                const std::int64_t q = m[i][t] / piv;
                for (std::size_t j = t; j < n; ++j) {
                    m[i][j] -= q * m[t][j];
                }
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const std::int64_t q = m[t][j] / piv;
                for (std::size_t i = t; i < n; ++i) {
                    m[i][j] -= q * m[i][t];
                }
                clean = clean && m[t][j] == 0;
            }
            if (!clean) {
                continue;
            }
            // Pivot must divide the rest of the block.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (m[i][j] % piv != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == n) {
                break;
            }
            for (std::size_t j = t; j < n; ++j) {
                m[t][j] += m[bad][j];
            }
        }
    }
    std::vector<std::int64_t> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = std::llabs(m[i][i]);
    }
    std::sort(d.begin(), d.end());
    return d;
}

// All compositions of `total` into n parts, each within [0, cap].
inline void compositions(int n, int total, int cap, std::vector<int> &cur,
                         const std::function<void(const std::vector<int> &)> &fn)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        if (total <= cap) {
            cur.push_back(total);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (int d = 0; d <= std::min(cap, total); ++d) {
        cur.push_back(d);
        compositions(n, total - d, cap, cur, fn);
        cur.pop_back();
    }
}

} // namespace detail

// Upper bound on the number of matrices omega_cosets would examine.
inline constexpr std::int64_t kMaxCosetCandidates = 10'000'000;

// Visits every HNF coset representative whose elementary divisors are
// prime^{lambda}. Only diagonals within [lambda_n, lambda_1] can occur, and a
// common factor prime^{lambda_n} is split off before enumerating.
inline void for_each_coset(const Signature &lambda, int n, std::int64_t prime,
                           const std::function<void(const CosetMatrix &)> &fn)
{
    if (lambda.length() != n) {
        throw LengthMismatch("lambda " + lambda.str() + " for n=" + std::to_string(n));
    }
    if (!detail::is_prime(prime)) {
        throw InvalidArgument(std::to_string(prime) + " is not prime");
    }
    if (n == 0) {
        return;
    }
    const int base = lambda[n - 1];
    const int top = lambda[0] - base;
    const int total = lambda.weight() - n * base;

    // Target exponents, ascending, for the reduced problem.
    std::vector<std::int64_t> target;
    for (int i = n - 1; i >= 0; --i) {
        target.push_back(detail::ipow(prime, lambda[i] - base));
    }

    std::vector<std::vector<int>> diagonals;
    std::int64_t candidates = 0;
    std::vector<int> cur;
    detail::compositions(n, total, top, cur, [&](const std::vector<int> &d) {
        std::int64_t count = 1;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                count *= detail::ipow(prime, d[static_cast<std::size_t>(j)]);
                if (count > kMaxCosetCandidates) {
                    throw EnumerationTooLarge("lambda " + lambda.str() + " at prime " + std::to_string(prime));
                }
            }
        }
        candidates += count;
        if (candidates > kMaxCosetCandidates) {
            throw EnumerationTooLarge("lambda " + lambda.str() + " at prime " + std::to_string(prime));
        }
        diagonals.push_back(d);
    });

    const std::int64_t scale = detail::ipow(prime, base);
    for (const auto &d : diagonals) {
        // Free upper entries, column by column.
        std::vector<std::pair<int, int>> slots;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                slots.emplace_back(i, j);
            }
        }
        std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = detail::ipow(prime, d[static_cast<std::size_t>(i)]);
        }
        std::function<void(std::size_t)> fill = [&](std::size_t s) {
            if (s == slots.size()) {
                if (detail::smith_diagonal(m) != target) {
                    return;
                }
                CosetMatrix cm;
                cm.n = n;
                cm.diag_exps = d;
                cm.entries = m;
                for (int i = 0; i < n; ++i) {
                    cm.diag_exps[static_cast<std::size_t>(i)] += base;
                    for (int j = 0; j < n; ++j) {
                        cm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= scale;
                    }
                }
                fn(cm);
                return;
            }
            const auto [i, j] = slots[s];
            const std::int64_t mod = detail::ipow(prime, d[static_cast<std::size_t>(j)]);
            for (std::int64_t v = 0; v < mod; ++v) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                fill(s + 1);
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        };
        fill(0);
    }
}

// omega(t(p^lambda)) at a concrete prime by summing prod_i (prime^{-i} x_i)^{d_i}
// over the left cosets in the double coset of diag(prime^lambda).
inline XPoly omega_cosets(const Signature &lambda, int n, std::int64_t prime)
{
    if (lambda.length() != n) {
        throw LengthMismatch("lambda " + lambda.str() + " for n=" + std::to_string(n));
    }
    if (lambda.is_zero()) {
        if (!detail::is_prime(prime)) {
            throw InvalidArgument(std::to_string(prime) + " is not prime");
        }
        return XPoly::constant(n + 1, PrimeLaurent(1));
    }
    std::map<std::vector<int>, std::int64_t> counts;
    for_each_coset(lambda, n, prime, [&](const CosetMatrix &c) { ++counts[c.diag_exps]; });
    XPoly r(n + 1);
    for (const auto &[d, count] : counts) {
        Exponents e(static_cast<std::size_t>(n + 1), 0);
        int shift = 0;
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(i + 1)] = d[static_cast<std::size_t>(i)];
            shift += (i + 1) * d[static_cast<std::size_t>(i)];
        }
        Rational c(static_cast<long>(count));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(prime), static_cast<unsigned long>(shift));
        c /= Rational(den);
        r.add_term(std::move(e), PrimeLaurent(c));
    }
    return r;
}

} // namespace hecke
