#include <gtest/gtest.h>

#include <hecke/hecke.hpp>
#include <hecke/reference.hpp>
#include <hecke/verify.hpp>

using namespace hecke;

namespace
{

XPoly mono(std::initializer_list<int> e)
{
    return XPoly::monomial(Exponents(e), PrimeLaurent(1));
}

} // namespace

TEST(Signature, Validation)
{
    EXPECT_NO_THROW(Signature({2, 1, 0}));
    EXPECT_THROW(Signature({1, 2, 0}), IndexOutOfRange);
    EXPECT_THROW(Signature({1, 0, -1}), IndexOutOfRange);
    EXPECT_EQ(Signature::sorted({0, 2, 1}), Signature({2, 1, 0}));
    EXPECT_EQ(Signature({3, 1, 1}).str(), "[3,1,1]");
    EXPECT_EQ(Signature({3, 1, 1}).weight(), 5);
}

TEST(Msym, OneOneZero)
{
    EXPECT_EQ(msym({1, 1, 0}, 3), mono({0, 1, 1, 0}) + mono({0, 1, 0, 1}) + mono({0, 0, 1, 1}));
}

TEST(Msym, Zero)
{
    EXPECT_EQ(msym({0, 0, 0}, 3), XPoly::constant(4, PrimeLaurent(1)));
}

TEST(Msym, FourThreeTwo)
{
    const XPoly want = mono({0, 4, 3, 2}) + mono({0, 4, 2, 3}) + mono({0, 3, 4, 2}) + mono({0, 3, 2, 4}) +
                       mono({0, 2, 4, 3}) + mono({0, 2, 3, 4});
    EXPECT_EQ(msym({4, 3, 2}, 3), want);
    EXPECT_EQ(msym({4, 3, 2}, 3).size(), 6U);
}

TEST(Msym, LengthMismatch)
{
    EXPECT_THROW(msym({1, 0}, 3), LengthMismatch);
}

TEST(Msym, StabiliserCountAndHomogeneity)
{
    for (const auto &sig : verify::detail::signatures(3, 6)) {
        const XPoly m = msym(sig, 3);
        int stab = 1;
        for (const auto &[part, mult] : sig.multiplicities()) {
            for (int k = 2; k <= mult; ++k) {
                stab *= k;
            }
        }
        EXPECT_EQ(static_cast<int>(m.size()), 6 / stab) << sig.str();
        for (const auto &[e, c] : m.terms()) {
            EXPECT_EQ(total_degree(e), sig.weight());
            EXPECT_TRUE(c.is_one());
        }
    }
}

TEST(Msym, GeneratingFunctionDevice)
{
    for (const auto &sig : verify::detail::signatures(3, 6)) {
        EXPECT_EQ(verify::detail::msym_by_generating_function(sig), msym(sig, 3)) << sig.str();
    }
}

TEST(Elem, Values)
{
    EXPECT_EQ(elem(0, 3), XPoly::constant(4, PrimeLaurent(1)));
    EXPECT_EQ(elem(2, 3), msym({1, 1, 0}, 3));
    EXPECT_EQ(elem(3, 3), mono({0, 1, 1, 1}));
    EXPECT_THROW(elem(4, 3), IndexOutOfRange);
    EXPECT_THROW(elem(-1, 3), IndexOutOfRange);
}

TEST(ToMsym, TpImage)
{
    const MsymDecomposition d = to_msym(sp_image_Tp(3));
    const MsymDecomposition want{{{1, {0, 0, 0}}, PrimeLaurent(1)},
                                 {{1, {1, 0, 0}}, PrimeLaurent(1)},
                                 {{1, {1, 1, 0}}, PrimeLaurent(1)},
                                 {{1, {1, 1, 1}}, PrimeLaurent(1)}};
    EXPECT_EQ(d, want);
}

TEST(ToMsym, Elementary)
{
    const MsymDecomposition want{{{0, {1, 1, 0}}, PrimeLaurent(1)}};
    EXPECT_EQ(to_msym(elem(2, 3)), want);
}

TEST(ToMsym, NumeratorSquareCoefficient)
{
    const MsymDecomposition want{
        {{2, {1, 1, 0}}, -PrimeLaurent::p_power(-1)},
        {{2, {1, 1, 1}}, -PrimeLaurent::from_desc({1, 1, 1}, -2)},
        {{2, {2, 1, 1}}, -PrimeLaurent::p_power(-1)},
    };
    EXPECT_EQ(to_msym(reference::p3_numerator()[2]), want);
}

TEST(ToMsym, RoundTrip)
{
    for (const auto &sig : verify::detail::signatures(3, 6)) {
        const MsymDecomposition want{{{0, sig}, PrimeLaurent(1)}};
        EXPECT_EQ(to_msym(msym(sig, 3)), want);
    }
    const XPoly a = omega_hl({3, 1, 0}, 3);
    EXPECT_EQ(from_msym(to_msym(a), 3), a);
}

TEST(ToMsym, NotSymmetric)
{
    EXPECT_THROW(to_msym(mono({0, 1, 0, 0})), NotSymmetric);
    EXPECT_THROW(to_msym(mono({0, 0, 0, 1})), NotSymmetric);
    EXPECT_THROW(to_msym(msym({1, 0, 0}, 3) + mono({0, 1, 0, 0})), NotSymmetric);
}

TEST(Render, OmegaItemFive)
{
    EXPECT_EQ(render_symmetric(omega_hl({2, 1, 0}, 3)), "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]");
    EXPECT_EQ(render_symmetric(omega_hl({0, 0, 0}, 3)), "1");
    EXPECT_EQ(render_symmetric(omega_hl({2, 1, 0}, 3), Style::Latex),
              "\\frac{2p^{2}-p-1}{p^{6}}\\,\\mathit{sym}_{1,1,1} + \\frac{1}{p^{4}}\\,\\mathit{sym}_{2,1,0}");
}

TEST(Render, GroupsByX0Power)
{
    EXPECT_EQ(render_symmetric(sp_image_pbracket(3)), "x0^2 * (1/p^6 * sym[1,1,1])");
    EXPECT_EQ(render_symmetric(sp_image_Tp(3)), "x0 * (1 + sym[1,0,0] + sym[1,1,0] + sym[1,1,1])");
    EXPECT_EQ(render_symmetric(mono({0, 1, 0, 0})), "x1");
}
