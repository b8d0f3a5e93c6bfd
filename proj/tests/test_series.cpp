#include <gtest/gtest.h>

#include "gwpow/series.hpp"
#include "gwpow/verify/generators.hpp"

using namespace gwpow;

namespace {

const BaseField Q = BaseField::rationals();

} // namespace

TEST(Series, GeometricPowerOfOneIsGeometric)
{
    const auto f = geom_pow(GWElement::one(Q), 5);
    for (std::size_t n = 0; n <= 5; ++n) {
        EXPECT_EQ(f[n], GWElement::one(Q));
    }
    EXPECT_EQ(to_string(f), "1 + t + t^2 + t^3 + t^4 + t^5 + O(t^6)");
}

TEST(Series, GeometricPowersMultiply)
{
    verify::Generator gen(41);
    for (int i = 0; i < 30; ++i) {
        const auto p = gen.element(Q);
        const auto q = gen.element(Q);
        EXPECT_TRUE(series_eq(s_mul(geom_pow(p, 5), geom_pow(q, 5)), geom_pow(p + q, 5)));
        EXPECT_TRUE(series_eq(s_inv(geom_pow(p, 5)), geom_pow(-p, 5)));
    }
}

TEST(Series, AddAndFieldChecks)
{
    const auto f = geom_pow(GWElement::one(Q), 3);
    const auto g = s_add(f, f);
    EXPECT_EQ(g[2], GWElement::form(Q, 1, 2));
    try {
        (void)s_add(f, geom_pow(GWElement::one(BaseField::reals()), 3));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
    EXPECT_FALSE(series_eq(f, geom_pow(GWElement::one(Q), 4)));
}

TEST(Series, KapranovAgreesWithGeometricPower)
{
    verify::Generator gen(42);
    const Int pool[] = {-1, 2, 3, -5, 6, 7};
    for (int i = 0; i < 20; ++i) {
        K0Class x(Q);
        for (int k = 0; k < 3; ++k) {
            const auto group = SqClassSubgroup::from_integers(Q, {pool[gen.integer(0, 5)]});
            x += K0Class::monomial(gen.integer(0, 2), group, gen.integer(-1, 2));
        }
        EXPECT_TRUE(series_eq(kapranov_chi_zeta(x, 4), geom_pow(chi(x), 4))) << to_string(x);
    }
}

TEST(Series, IntegerBinomialSeries)
{
    // (1-t)^(-2) = 1 + 2t + 3t^2 + ...
    EXPECT_EQ(integer_binomial_series(2, 0, 4), (std::vector<Int>{1, 2, 3, 4, 5}));
    // (1+t)^(-1) = 1 - t + t^2 - ...
    EXPECT_EQ(integer_binomial_series(0, 1, 3), (std::vector<Int>{1, -1, 1, -1}));
    // (1-t)^2 = 1 - 2t + t^2
    EXPECT_EQ(integer_binomial_series(-2, 0, 3), (std::vector<Int>{1, -2, 1, 0}));
    // (1-t)^(-1)(1+t)^(-1) = 1/(1-t^2)
    EXPECT_EQ(integer_binomial_series(1, 1, 4), (std::vector<Int>{1, 0, 1, 0, 1}));
}

TEST(Series, Rendering)
{
    const auto f7 = BaseField::prime_field(7);
    // -1 is a nonsquare mod 7 with representative 3; 2 is a square, so no t_alpha terms survive
    const auto f = geom_pow(GWElement::hyperbolic(f7), 2);
    EXPECT_EQ(to_string(f), "1 + (⟨1⟩ + ⟨3⟩)t + (2⟨1⟩ + ⟨3⟩)t^2 + O(t^3)");
    EXPECT_EQ(to_string(GWSeries(2, GWElement::zero(Q))), "0 + O(t^3)");
}
