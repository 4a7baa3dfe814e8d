#include <gtest/gtest.h>

#include <random>

#include <hecke/hecke.hpp>
#include <hecke/verify.hpp>

using namespace hecke;

namespace
{

XPoly rebuild(const XPoly &a)
{
    XPoly r(a.nvars());
    for (const auto &[e, c] : a.terms()) {
        r.add_term(e, PrimeLaurent::from_terms(c.terms()));
    }
    return r;
}

} // namespace

TEST(Properties, CanonicalFormIdempotent)
{
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        const PrimeLaurent a = verify::detail::random_laurent(rng);
        EXPECT_EQ(PrimeLaurent::from_terms(a.terms()), a);
        const XPoly x = verify::detail::random_xpoly(rng, 4, 3, 5);
        EXPECT_EQ(rebuild(x), x);
        EXPECT_EQ(rebuild(rebuild(x)), rebuild(x));
        for (const auto &[e, c] : x.terms()) {
            EXPECT_FALSE(c.is_zero());
            EXPECT_EQ(static_cast<int>(e.size()), 4);
        }
    }
}

TEST(Properties, MultiplicationCommutesWithSpecialisation)
{
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        const XPoly a = verify::detail::random_xpoly(rng, 4, 2, 4);
        const XPoly b = verify::detail::random_xpoly(rng, 4, 2, 4);
        const Rational q(3);
        EXPECT_EQ((a * b).at_prime(q), a.at_prime(q) * b.at_prime(q));
    }
}

TEST(Properties, JsonRoundTripOfComputedValues)
{
    for (const auto &sig : verify::detail::signatures(3, 3)) {
        const XPoly w = omega_hl(sig, 3);
        EXPECT_EQ(xpoly_from_json(Json::parse(to_json(w).dump())), w);
    }
    const QCoefficients q = q3_in_generators();
    const QCoefficients back = qcoefficients_from_json(Json::parse(to_json(q).dump()));
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_EQ(back.t[i], q.t[i]);
    }
}

TEST(Properties, AcceptanceSuite)
{
    for (const auto &check : verify::all_checks()) {
        const auto r = check();
        EXPECT_TRUE(r.passed) << verify::format_result(r);
    }
}
