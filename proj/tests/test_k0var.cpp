#include <gtest/gtest.h>

#include "gwpow/k0var.hpp"
#include "gwpow/power.hpp"
#include "gwpow/verify/generators.hpp"
#include "gwpow/verify/oracles.hpp"

using namespace gwpow;

namespace {

const BaseField Q = BaseField::rationals();

K0Class random_class(verify::Generator& gen, int terms = 2)
{
    const Int pool[] = {-1, 2, 3, 5, -3, 6};
    K0Class x(Q);
    for (int k = 0; k < terms; ++k) {
        std::vector<Int> gens;
        const Int r = gen.integer(0, 2);
        for (Int j = 0; j < r; ++j) {
            gens.push_back(pool[gen.integer(0, 5)]);
        }
        x += K0Class::monomial(gen.integer(0, 2), SqClassSubgroup::span(Q, [&] {
                                   std::vector<SquareClass> cls;
                                   for (Int g : gens) {
                                       cls.push_back(square_class(Q, g));
                                   }
                                   return cls;
                               }()),
                               gen.integer(1, 2));
    }
    return x;
}

} // namespace

TEST(K0, ProductRule)
{
    const auto e3 = spec_algebra(SqClassSubgroup::from_integers(Q, {3}));
    const auto e5 = spec_algebra(SqClassSubgroup::from_integers(Q, {5}));
    // Q(sqrt3) (x) Q(sqrt3) = Q(sqrt3)^2
    EXPECT_EQ(e3 * e3, 2 * e3);
    EXPECT_EQ(e3 * e5, spec_algebra(SqClassSubgroup::from_integers(Q, {3, 5})));
    EXPECT_EQ(affine(Q, 1) * affine(Q, 2), affine(Q, 3));
}

TEST(K0, ProductMatchesPointCount)
{
    verify::Generator gen(51);
    for (int i = 0; i < 60; ++i) {
        const auto x = random_class(gen, 1);
        const auto y = random_class(gen, 1);
        EXPECT_EQ(x * y, verify::product_by_points(x, y)) << to_string(x) << " * " << to_string(y);
    }
}

TEST(K0, SymmetricPowersMatchPointCount)
{
    verify::Generator gen(52);
    for (int i = 0; i < 30; ++i) {
        const auto x = random_class(gen, 2);
        for (Int n = 0; n <= 3; ++n) {
            EXPECT_EQ(sym_power(x, n), verify::sym_power_by_points(x, n)) << to_string(x) << " n=" << n;
        }
    }
}

TEST(K0, ChiIsARingHomomorphism)
{
    verify::Generator gen(53);
    for (int i = 0; i < 60; ++i) {
        const auto x = random_class(gen);
        const auto y = random_class(gen);
        EXPECT_TRUE(eq(chi(x * y), chi(x) * chi(y)));
        EXPECT_EQ(chi(x + y), chi(x) + chi(y));
    }
    EXPECT_EQ(chi(point(Q)), GWElement::one(Q));
}

TEST(K0, ChiOfSymmetricPowersIsPowerStructure)
{
    verify::Generator gen(54);
    for (int i = 0; i < 25; ++i) {
        const auto x = random_class(gen);
        const auto series = power_series(chi(x), 3);
        for (Int n = 0; n <= 3; ++n) {
            EXPECT_TRUE(eq(chi(sym_power(x, n)), series[static_cast<std::size_t>(n)])) << to_string(x);
        }
    }
}

TEST(K0, NamedClasses)
{
    EXPECT_TRUE(eq(chi(proj_space(Q, 1)), GWElement::hyperbolic(Q)));
    EXPECT_TRUE(eq(chi(proj_space(Q, 2)), GWElement::form(Q, 1, 2) + GWElement::form(Q, -1)));
    EXPECT_EQ(chi(gm(Q)), GWElement::form(Q, -1) - GWElement::one(Q));
    EXPECT_EQ(chi(nodal_union(Q)), 2 * GWElement::form(Q, -1) - GWElement::one(Q));
    EXPECT_EQ(chi(cuspidal_cubic(Q)), GWElement::hyperbolic(Q));
    // Torus: chi = H - <2> - <2*3>
    EXPECT_TRUE(eq(chi(torus_1d(square_class(Q, 3))),
                   GWElement::hyperbolic(Q) - GWElement::form(Q, 2) - GWElement::form(Q, 6)));
    // Sym^n of a point is a point; Sym^n(A^1) = A^n
    EXPECT_EQ(sym_power(point(Q), 4), point(Q));
    EXPECT_EQ(sym_power(affine(Q, 1), 3), affine(Q, 3));
    // Sym^2 Spec Q(sqrt3): two geometric points, orbits {2p}, {2q} and {p + q}
    const auto e3 = spec_algebra(SqClassSubgroup::from_integers(Q, {3}));
    EXPECT_EQ(sym_power(e3, 2), e3 + point(Q));
}

TEST(K0, BlowUp)
{
    // Blowing up a rational point of P^2 gives P^2 + A^1
    EXPECT_EQ(blowup_class(proj_space(Q, 2), point(Q), 2), proj_space(Q, 2) + affine(Q, 1));
}

TEST(K0, TextRoundTrip)
{
    verify::Generator gen(55);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_class(gen, 3);
        EXPECT_EQ(parse_k0(Q, to_string(x)), x) << to_string(x);
    }
    EXPECT_EQ(parse_k0(Q, "P^2 - A"), point(Q) + affine(Q, 2));
    EXPECT_EQ(parse_k0(Q, "2*A^2*Et(3)"), K0Class::monomial(2, SqClassSubgroup::from_integers(Q, {3}), 2));
}

TEST(K0, Errors)
{
    auto expect_kind = [](ErrorKind kind, auto&& fn) {
        try {
            fn();
            ADD_FAILURE() << to_string(kind);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), kind);
        }
    };
    expect_kind(ErrorKind::TrivialClass, [] { (void)torus_1d(square_class(Q, 4)); });
    expect_kind(ErrorKind::BadCodim, [] { (void)blowup_class(proj_space(Q, 2), point(Q), 0); });
    expect_kind(ErrorKind::OutOfRange, [] { (void)affine(Q, -1); });
    expect_kind(ErrorKind::NotIndependent, [] { (void)SqClassSubgroup::from_integers(Q, {3, 12}); });
    expect_kind(ErrorKind::ParseError, [] { (void)parse_k0(Q, "B^2"); });
    expect_kind(ErrorKind::FieldMismatch, [] { (void)(point(Q) + point(BaseField::reals())); });
    expect_kind(ErrorKind::SizeLimit, [] {
        (void)sym_power(spec_algebra(SqClassSubgroup::from_integers(Q, {2, 3, 5, 7})), 2);
    });
}
