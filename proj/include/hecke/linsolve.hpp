#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <hecke/errors.hpp>
#include <hecke/laurent.hpp>
#include <hecke/prime_rat.hpp>

namespace hecke
{

using LaurentMatrix = std::vector<std::vector<PrimeLaurent>>;

// Solves A x = b for a unique x over Q(p). A is m x k with Laurent entries.
// Fraction-free (Bareiss) elimination keeps every intermediate in the Laurent
// ring; only back-substitution leaves it. Throws NoSolution when the system is
// inconsistent and NonUniqueSolution when A has rank < k.
inline std::vector<PrimeRat> solve_unique(const LaurentMatrix &a, const std::vector<PrimeLaurent> &b)
{
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw LengthMismatch("right-hand side length");
    }
    const std::size_t k = m == 0 ? 0 : a.front().size();
    LaurentMatrix aug(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) {
            throw LengthMismatch("ragged matrix");
        }
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }

    std::vector<std::size_t> pivot_cols;
    PrimeLaurent prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i) {
            if (!aug[i][c].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == m) {
            continue;
        }
        std::swap(aug[r], aug[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j <= k; ++j) {
                aug[i][j] = div_exact(aug[r][c] * aug[i][j] - aug[i][c] * aug[r][j], prev);
            }
            aug[i][c] = PrimeLaurent{};
        }
        prev = aug[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (!aug[i][k].is_zero()) {
            throw NoSolution("inconsistent linear system");
        }
    }
    if (r < k) {
        throw NonUniqueSolution("rank " + std::to_string(r) + " < " + std::to_string(k) + " unknowns");
    }

    std::vector<PrimeRat> x(k);
    for (std::size_t t = r; t-- > 0;) {
        const std::size_t c = pivot_cols[t];
        PrimeRat acc(aug[t][k]);
        for (std::size_t j = c + 1; j < k; ++j) {
            if (!aug[t][j].is_zero()) {
                acc = acc - PrimeRat(aug[t][j]) * x[j];
            }
        }
        x[c] = acc / PrimeRat(aug[t][c]);
    }
    return x;
}

} // namespace hecke
