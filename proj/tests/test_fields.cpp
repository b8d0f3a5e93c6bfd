#include <gtest/gtest.h>

#include "gwpow/fields.hpp"
#include "gwpow/subgroup.hpp"
#include "gwpow/verify/generators.hpp"
#include "gwpow/verify/oracles.hpp"

using namespace gwpow;

namespace {

const BaseField Q = BaseField::rationals();

ErrorKind kind_of(const auto& body)
{
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::ParseError;
}

} // namespace

TEST(BaseField, ParsesSelectors)
{
    EXPECT_EQ(BaseField::parse("Q"), Q);
    EXPECT_EQ(BaseField::parse("R").name(), "R");
    EXPECT_EQ(BaseField::parse("C").name(), "C");
    EXPECT_EQ(BaseField::parse("Fp:7").name(), "Fp:7");
    EXPECT_EQ(BaseField::parse("F11").characteristic(), 11);
    EXPECT_EQ(kind_of([] { BaseField::parse("Fp:2"); }), ErrorKind::CharTwo);
    EXPECT_EQ(kind_of([] { BaseField::parse("Fp:9"); }), ErrorKind::BadPrime);
    EXPECT_EQ(kind_of([] { BaseField::parse("Z"); }), ErrorKind::ParseError);
}

TEST(BaseField, LeastNonresidue)
{
    EXPECT_EQ(BaseField::prime_field(7).least_nonresidue(), 3);
    EXPECT_EQ(BaseField::prime_field(5).least_nonresidue(), 2);
    EXPECT_EQ(BaseField::prime_field(17).least_nonresidue(), 3);
}

TEST(Legendre, MatchesEulerCriterion)
{
    for (Int p : {3, 5, 7, 11, 13, 101}) {
        for (Int a = -30; a <= 30; ++a) {
            Int expected = 0;
            if (a % p != 0) {
                bool square = false;
                for (Int x = 1; x < p; ++x) {
                    square = square || ((x * x - a) % p + p) % p == 0;
                }
                expected = square ? 1 : -1;
            }
            EXPECT_EQ(legendre(a, p), expected) << a << " mod " << p;
        }
    }
    EXPECT_EQ(kind_of([] { legendre(3, 9); }), ErrorKind::BadPrime);
}

TEST(SquareClass, CanonicalRepresentatives)
{
    EXPECT_EQ(square_class(Q, 12).rep(), 3);
    EXPECT_EQ(square_class(Q, -18).rep(), -2);
    EXPECT_EQ(square_class(Q, Rational{3, 4}).rep(), 3);
    EXPECT_EQ(square_class(Q, Rational{2, 3}).rep(), 6);
    EXPECT_EQ(square_class(Q, 49).rep(), 1);
    EXPECT_EQ(square_class(BaseField::reals(), -5).rep(), -1);
    EXPECT_EQ(square_class(BaseField::complexes(), -5).rep(), 1);
    const auto f7 = BaseField::prime_field(7);
    EXPECT_EQ(square_class(f7, 2).rep(), 1);
    EXPECT_EQ(square_class(f7, 5).rep(), 3);
    EXPECT_EQ(square_class(f7, Rational{1, 3}).rep(), 3);
    EXPECT_EQ(kind_of([] { square_class(Q, 0); }), ErrorKind::ZeroInput);
    EXPECT_EQ(kind_of([f7] { square_class(f7, 14); }), ErrorKind::ZeroInput);
}

TEST(SquareClass, ProductIsClassOfProduct)
{
    verify::Generator gen(11);
    for (const auto& field : {Q, BaseField::reals(), BaseField::prime_field(7), BaseField::prime_field(13)}) {
        const Int p = field.kind() == BaseField::Kind::PrimeField ? field.characteristic() : 0;
        for (int i = 0; i < 300; ++i) {
            const Int a = gen.unit(500, p);
            const Int b = gen.unit(500, p);
            EXPECT_EQ(square_class(field, a) * square_class(field, b), square_class(field, a * b));
        }
    }
}

TEST(SquareClass, FactorizationLimit)
{
    // 1000003 * 1000033 has no factor below the bound and is not prime.
    const Int n = Int{1000003} * Int{1000033};
    EXPECT_EQ(kind_of([n] { square_class(Q, Rational{n}, 1000); }), ErrorKind::FactorizationLimit);
    EXPECT_EQ(square_class(Q, Rational{n}).rep(), n);
}

TEST(Hilbert, AgreesWithLocalSolvability)
{
    for (Int p : {0, 2, 3, 5, 7, 11}) {
        const auto v = p == 0 ? Place::real() : Place::prime(p);
        for (Int a = -30; a <= 30; ++a) {
            for (Int b = -30; b <= 30; ++b) {
                if (a != 0 && b != 0) {
                    ASSERT_EQ(hilbert_symbol(Rational{a}, Rational{b}, v), verify::hilbert_by_search(a, b, p))
                        << "(" << a << ", " << b << ")_" << v.name();
                }
            }
        }
    }
}

TEST(Hilbert, ProductFormula)
{
    verify::Generator gen(12);
    for (int i = 0; i < 300; ++i) {
        const Int a = gen.nonzero(2000);
        const Int b = gen.nonzero(2000);
        int product = hilbert_symbol(Rational{a}, Rational{b}, Place::real());
        for (const auto& pp : arith::factorize(static_cast<std::uint64_t>(2 * std::llabs(a) * std::llabs(b)))) {
            product *= hilbert_symbol(Rational{a}, Rational{b}, Place::prime(static_cast<Int>(pp.prime)));
        }
        EXPECT_EQ(product, 1) << a << ", " << b;
    }
}

TEST(Hilbert, BilinearAndSymmetric)
{
    verify::Generator gen(13);
    for (int i = 0; i < 300; ++i) {
        const Int a = gen.nonzero(60);
        const Int b = gen.nonzero(60);
        const Int c = gen.nonzero(60);
        for (Int p : {0, 2, 3, 5, 7}) {
            const auto v = p == 0 ? Place::real() : Place::prime(p);
            EXPECT_EQ(hilbert_symbol(Rational{a}, Rational{b}, v), hilbert_symbol(Rational{b}, Rational{a}, v));
            EXPECT_EQ(hilbert_symbol(Rational{a}, Rational{b * c}, v),
                      hilbert_symbol(Rational{a}, Rational{b}, v) * hilbert_symbol(Rational{a}, Rational{c}, v));
            EXPECT_EQ(hilbert_symbol(Rational{a}, Rational{-a}, v), 1);
        }
    }
}

TEST(Hilbert, RejectsFieldsWithoutThePlace)
{
    const auto f7 = BaseField::prime_field(7);
    EXPECT_EQ(kind_of([f7] { hilbert_symbol(square_class(f7, 3), square_class(f7, 3), Place::real()); }),
              ErrorKind::NoRealPlace);
    const auto r = BaseField::reals();
    EXPECT_EQ(hilbert_symbol(square_class(r, -1), square_class(r, -1), Place::real()), -1);
}

TEST(Subgroup, SpanAndIndependence)
{
    const auto g = SqClassSubgroup::from_integers(Q, {3, 5});
    EXPECT_EQ(g.order(), 4U);
    EXPECT_TRUE(g.contains(square_class(Q, 15)));
    EXPECT_FALSE(g.contains(square_class(Q, 7)));
    EXPECT_EQ(kind_of([] { SqClassSubgroup::from_integers(Q, {3, 5, 15}); }), ErrorKind::NotIndependent);
    EXPECT_EQ(kind_of([] { SqClassSubgroup::from_integers(Q, {4}); }), ErrorKind::TrivialClass);
    const auto h = SqClassSubgroup::from_integers(Q, {15, 7});
    EXPECT_EQ(intersection(g, h).order(), 2U);
    EXPECT_EQ(product(g, h).order(), 8U);
    EXPECT_EQ(SqClassSubgroup::span(Q, {square_class(Q, 3), square_class(Q, 12)}).order(), 2U);
    for (std::uint64_t m = 0; m < g.order(); ++m) {
        EXPECT_EQ(g.coordinates(g.element_at(m)), m);
    }
}

TEST(Subgroup, OverFiniteField)
{
    const auto f7 = BaseField::prime_field(7);
    const auto g = SqClassSubgroup::from_integers(f7, {3});
    EXPECT_EQ(g.order(), 2U);
    EXPECT_EQ(kind_of([f7] { SqClassSubgroup::from_integers(f7, {3, 5}); }), ErrorKind::NotIndependent);
}
