#include <gtest/gtest.h>

#include <hecke/hecke.hpp>
#include <hecke/verify.hpp>

using namespace hecke;

namespace
{

XPoly scaled(const XPoly &a, long num, long den)
{
    return a * PrimeLaurent(make_rational(num, den));
}

std::int64_t count_cosets(const Signature &lambda, int n, std::int64_t prime)
{
    std::int64_t count = 0;
    for_each_coset(lambda, n, prime, [&](const CosetMatrix &) { ++count; });
    return count;
}

} // namespace

TEST(SmithDiagonal, SmallMatrices)
{
    EXPECT_EQ(detail::smith_diagonal({{2, 0}, {0, 3}}), (std::vector<std::int64_t>{1, 6}));
    EXPECT_EQ(detail::smith_diagonal({{3, 1, 0}, {0, 3, 0}, {0, 0, 1}}), (std::vector<std::int64_t>{1, 1, 9}));
    EXPECT_EQ(detail::smith_diagonal({{3, 0, 0}, {0, 3, 0}, {0, 0, 1}}), (std::vector<std::int64_t>{1, 3, 3}));
    EXPECT_EQ(detail::smith_diagonal({{4, 2}, {0, 2}}), (std::vector<std::int64_t>{2, 4}));
}

TEST(OmegaCosets, DegreeOneAtTwo)
{
    EXPECT_EQ(omega_cosets({1, 0, 0}, 3, 2), scaled(msym({1, 0, 0}, 3), 1, 2));
    std::map<std::vector<int>, int> by_diag;
    for_each_coset({1, 0, 0}, 3, 2, [&](const CosetMatrix &c) { ++by_diag[c.diag_exps]; });
    const std::map<std::vector<int>, int> want{{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 4}};
    EXPECT_EQ(by_diag, want);
}

TEST(OmegaCosets, TrivialSignature)
{
    for (std::int64_t q : {2, 3, 5, 7}) {
        EXPECT_EQ(omega_cosets({0, 0, 0}, 3, q), XPoly::constant(4, PrimeLaurent(1)));
    }
}

TEST(OmegaCosets, OneOneZeroAtThree)
{
    EXPECT_EQ(omega_cosets({1, 1, 0}, 3, 3), scaled(msym({1, 1, 0}, 3), 1, 27));
}

TEST(OmegaCosets, CountForDegreeOne)
{
    for (std::int64_t q : {2, 3, 5}) {
        EXPECT_EQ(count_cosets({1, 0, 0}, 3, q), q * q + q + 1);
    }
}

TEST(OmegaCosets, HermiteInvariants)
{
    for_each_coset({2, 1, 0}, 3, 3, [](const CosetMatrix &c) {
        for (int j = 0; j < 3; ++j) {
            std::int64_t mod = 1;
            for (int k = 0; k < c.diag_exps[static_cast<std::size_t>(j)]; ++k) {
                mod *= 3;
            }
            EXPECT_EQ(c.at(j, j), mod);
            for (int i = 0; i < j; ++i) {
                EXPECT_GE(c.at(i, j), 0);
                EXPECT_LT(c.at(i, j), mod);
            }
            for (int i = j + 1; i < 3; ++i) {
                EXPECT_EQ(c.at(i, j), 0);
            }
        }
    });
}

TEST(OmegaCosets, ScalarShiftIsHandled)
{
    // diag(p, p, p) is a single coset.
    EXPECT_EQ(count_cosets({1, 1, 1}, 3, 5), 1);
    // Central p*I multiplies by omega(p*I) = x1 x2 x3 / p^6.
    for (std::int64_t q : {2, 3}) {
        const XPoly central = scaled(msym({1, 1, 1}, 3), 1, static_cast<long>(q * q * q * q * q * q));
        EXPECT_EQ(omega_cosets({2, 1, 1}, 3, q), omega_cosets({1, 0, 0}, 3, q) * central);
    }
}

TEST(OmegaCosets, MatchesClosedFormLowGenus)
{
    for (int n = 1; n <= 2; ++n) {
        for (const auto &sig : verify::detail::signatures(n, 4)) {
            for (std::int64_t q : {2, 3, 5}) {
                EXPECT_EQ(omega_hl(sig, n).at_prime(Rational(static_cast<long>(q))), omega_cosets(sig, n, q))
                    << "n=" << n << " " << sig.str() << " q=" << q;
            }
        }
    }
}

TEST(OmegaCosets, MatchesClosedFormGenusThree)
{
    for (const auto &sig : verify::detail::signatures(3, 3)) {
        for (std::int64_t q : {2, 3}) {
            EXPECT_EQ(omega_hl(sig, 3).at_prime(Rational(static_cast<long>(q))), omega_cosets(sig, 3, q))
                << sig.str() << " q=" << q;
        }
    }
}

TEST(OmegaCosets, Errors)
{
    EXPECT_THROW(omega_cosets({1, 0, 0}, 3, 4), InvalidArgument);
    EXPECT_THROW(omega_cosets({1, 0, 0}, 3, 1), InvalidArgument);
    EXPECT_THROW(omega_cosets({0, 0, 0}, 3, 6), InvalidArgument);
    EXPECT_THROW(omega_cosets({12, 0, 0}, 3, 5), EnumerationTooLarge);
    EXPECT_THROW(omega_cosets({1, 0}, 3, 2), LengthMismatch);
}
