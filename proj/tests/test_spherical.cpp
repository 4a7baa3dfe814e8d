#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include <hecke/hecke.hpp>
#include <hecke/reference.hpp>
#include <hecke/verify.hpp>

using namespace hecke;

namespace
{

using L = PrimeLaurent;

// Rank of a square matrix over F_q, q prime.
int rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t q)
{
    const int n = static_cast<int>(m.size());
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r) {
            if (m[r][c] % q != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(m[rank], m[piv]);
        std::int64_t inv = 1;
        while ((m[rank][c] * inv) % q != 1) {
            ++inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][c] % q == 0) {
                continue;
            }
            const std::int64_t f = (m[r][c] * inv) % q;
            for (int k = 0; k < n; ++k) {
                m[r][k] = ((m[r][k] - f * m[rank][k]) % q + q) % q;
            }
        }
        ++rank;
    }
    return rank;
}

// counts[r] = number of symmetric a x a matrices over F_q of rank r.
std::vector<std::int64_t> count_symmetric_by_rank(int a, std::int64_t q)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(a + 1), 0);
    const int cells = a * (a + 1) / 2;
    std::int64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        total *= q;
    }
    for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(a), std::vector<std::int64_t>(a));
        std::int64_t rest = code;
        for (int i = 0; i < a; ++i) {
            for (int j = i; j < a; ++j) {
                m[i][j] = m[j][i] = rest % q;
                rest /= q;
            }
        }
        ++counts[static_cast<std::size_t>(rank_mod(m, q))];
    }
    return counts;
}

XPoly x0sq(const XPoly &a)
{
    return a.shifted({2, 0, 0, 0});
}

} // namespace

TEST(Phi, Values)
{
    EXPECT_EQ(phi(0), L(1));
    EXPECT_EQ(phi(1), L::from_desc({1, -1}));
    EXPECT_EQ(phi(2), L::from_desc({1, -1, -1, 1}));
    EXPECT_THROW(phi(-1), IndexOutOfRange);
}

TEST(Sm, Values)
{
    EXPECT_EQ(sm(1, 3), L::from_desc({1, -1}) * L::from_desc({1, 1, 1}));
    EXPECT_EQ(sm(1, 2), L::from_desc({1, 0, -1}));
    EXPECT_EQ(sm(1, 1), L::from_desc({1, -1}));
    for (int a = 0; a <= 5; ++a) {
        EXPECT_EQ(sm(0, a), L(1));
    }
    EXPECT_THROW(sm(2, 1), IndexOutOfRange);
    EXPECT_THROW(sm(-1, 1), IndexOutOfRange);
}

TEST(Sm, BruteForceCountsOverSmallFields)
{
    for (std::int64_t q : {2, 3, 5}) {
        for (int a = 1; a <= 3; ++a) {
            const auto counts = count_symmetric_by_rank(a, q);
            for (int r = 0; r <= a; ++r) {
                EXPECT_EQ(sm(r, a).evaluate(Rational(static_cast<long>(q))),
                          Rational(static_cast<long>(counts[static_cast<std::size_t>(r)])))
                    << "r=" << r << " a=" << a << " q=" << q;
            }
        }
    }
}

TEST(OmegaHl, KnownExamples)
{
    EXPECT_EQ(omega_hl({0, 0, 0}, 3), XPoly::constant(4, L(1)));
    EXPECT_EQ(omega_hl({2, 1, 0}, 3),
              msym({1, 1, 1}, 3) * L::from_desc({2, -1, -1}, -6) + msym({2, 1, 0}, 3) * L::p_power(-4));
    EXPECT_EQ(omega_hl({1, 1, 0}, 3), msym({1, 1, 0}, 3) * L::p_power(-3));
    const auto table = reference::omega_table();
    ASSERT_EQ(table.size(), 28U);
    EXPECT_EQ(table.back().item, 28);
    EXPECT_EQ(omega_hl({6, 6, 0}, 3), reference::build(table.back().value));
}

TEST(OmegaHl, GoldenTable)
{
    for (const auto &entry : reference::omega_table()) {
        EXPECT_EQ(omega_hl(entry.lambda, 3), reference::build(entry.value)) << "item " << entry.item;
    }
}

TEST(OmegaHl, ItemTwentyEightHasSevenTerms)
{
    EXPECT_EQ(to_msym(omega_hl({6, 6, 0}, 3)).size(), 7U);
}

TEST(OmegaHl, SymmetricAndHomogeneous)
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &sig : verify::detail::signatures(n, 4)) {
            const XPoly w = omega_hl(sig, n);
            EXPECT_NO_THROW(to_msym(w)) << sig.str();
            for (const auto &[e, c] : w.terms()) {
                EXPECT_EQ(total_degree(e), sig.weight()) << sig.str();
            }
        }
    }
}

TEST(OmegaHl, LengthMismatch)
{
    EXPECT_THROW(omega_hl({1, 0}, 3), LengthMismatch);
}

TEST(OmegaPi, Values)
{
    EXPECT_EQ(omega_pi(1, 3), msym({1, 0, 0}, 3) * L::p_power(-1));
    EXPECT_EQ(omega_pi(2, 3), msym({1, 1, 0}, 3) * L::p_power(-3));
    EXPECT_EQ(omega_pi(3, 3), msym({1, 1, 1}, 3) * L::p_power(-6));
    EXPECT_THROW(omega_pi(0, 3), IndexOutOfRange);
    EXPECT_THROW(omega_pi(4, 3), IndexOutOfRange);
}

TEST(OmegaPi, AgreesWithClosedForm)
{
    for (int n = 1; n <= 3; ++n) {
        for (int i = 1; i <= n; ++i) {
            std::vector<int> parts(static_cast<std::size_t>(n), 0);
            std::fill(parts.begin(), parts.begin() + i, 1);
            EXPECT_EQ(omega_hl(Signature(parts), n), omega_pi(i, n)) << "i=" << i << " n=" << n;
        }
    }
}

TEST(SpImages, Tp)
{
    EXPECT_EQ(sp_image_Tp(3), reference::image_Tp());
    const XPoly x0 = XPoly::variable(2, 0), x1 = XPoly::variable(2, 1);
    EXPECT_EQ(sp_image_Tp(1), x0 + x0 * x1);
    const XPoly y0 = XPoly::variable(3, 0), y1 = XPoly::variable(3, 1), y2 = XPoly::variable(3, 2);
    EXPECT_EQ(sp_image_Tp(2), y0 * (XPoly::constant(3, L(1)) + y1 + y2 + y1 * y2));
}

TEST(SpImages, Ti)
{
    EXPECT_EQ(sp_image_Ti(3, 3), x0sq(msym({1, 1, 1}, 3)) * L::p_power(-6));
    const XPoly t2 = x0sq(msym({1, 1, 0}, 3)) * L::p_power(-3) + x0sq(msym({2, 1, 1}, 3)) * L::p_power(-3) +
                     x0sq(msym({1, 1, 1}, 3)) * (L::p_power(-6) * L::from_desc({1, -1}) * L::from_desc({1, 1, 1}));
    EXPECT_EQ(sp_image_Ti(2, 3), t2);
    EXPECT_EQ(sp_image_Ti(1, 3), reference::image_T1());
    EXPECT_EQ(to_msym(sp_image_Ti(1, 3)).size(), 6U);
    EXPECT_THROW(sp_image_Ti(0, 3), IndexOutOfRange);
    EXPECT_THROW(sp_image_Ti(4, 3), IndexOutOfRange);
}

TEST(SpImages, PBracket)
{
    EXPECT_EQ(sp_image_pbracket(3), XPoly::monomial({2, 1, 1, 1}, L::p_power(-6)));
    EXPECT_EQ(sp_image_pbracket(1), XPoly::monomial({2, 1}, L::p_power(-1)));
    EXPECT_EQ(sp_image_pbracket(2), XPoly::monomial({2, 1, 1}, L::p_power(-3)));
}

TEST(HeckeImage, Homomorphism)
{
    EXPECT_EQ(hecke_image(HeckeExpr(1)), XPoly::constant(4, L(1)));
    EXPECT_EQ(hecke_image(HeckeExpr::Tp() * HeckeExpr::pbracket()), sp_image_Tp(3) * sp_image_pbracket(3));
    const HeckeExpr e = HeckeExpr::T1() * L::p() + HeckeExpr::T2().pow(2);
    EXPECT_EQ(hecke_image(e), sp_image_Ti(1, 3) * L::p() + sp_image_Ti(2, 3) * sp_image_Ti(2, 3));
    EXPECT_THROW(hecke_image(HeckeExpr(1), 2), IndexOutOfRange);
}

TEST(HeckeImage, P3PresentationCoefficients)
{
    const auto u = reference::p3_generators();
    const auto p3 = reference::p3_numerator();
    ASSERT_EQ(u.size(), p3.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        EXPECT_EQ(hecke_image(u[j]), p3[j]) << "v^" << j;
    }
}
