#include <gtest/gtest.h>

#include <tuple>
#include <vector>

#include "gwpow/applications.hpp"
#include "gwpow/series.hpp"
#include "gwpow/verify/generators.hpp"

using namespace gwpow;

namespace {

const BaseField Q = BaseField::rationals();

std::vector<CubicSurfaceSpec> random_specs(std::uint64_t seed, int count)
{
    verify::Generator gen(seed);
    std::vector<CubicSurfaceSpec> out;
    while (static_cast<int>(out.size()) < count) {
        const auto a = gen.square_class_in(Q, 30);
        const auto b = gen.square_class_in(Q, 30);
        const auto c = gen.square_class_in(Q, 30);
        if (a.is_trivial() || b.is_trivial() || c.is_trivial()) {
            continue;
        }
        out.emplace_back(a, b, c);
    }
    return out;
}

} // namespace

TEST(CubicSurface, ClassAndChi)
{
    const CubicSurfaceSpec spec(Q, 3, 5, 7);
    const auto x = cubic_surface_class(spec);
    // P^2 - Y + Y P^1 = P^2 + A^1 Y
    EXPECT_EQ(x, proj_space(Q, 2) + affine(Q, 1) * exceptional_centre(spec));
    EXPECT_EQ(rank_hom(cubic_chi(spec)), 9);
    // chi(P^2) contributes signature 1 and <-1> chi(Y) contributes -6
    EXPECT_EQ(sign_hom(cubic_chi(spec)), -5);
    EXPECT_EQ(cubic_phi(spec), GWElement::form(Q, -6) + GWElement::form(Q, -10) + GWElement::form(Q, -14));
}

TEST(CubicSurface, ProofFormIsChi)
{
    for (const auto& spec : random_specs(61, 150)) {
        EXPECT_TRUE(eq(cubic_chi(spec), cubic_chi_proof_form(spec)));
    }
}

TEST(CubicSurface, StatementFormDiffersByTorsion)
{
    const auto minus_one = GWElement::form(Q, -1);
    for (const auto& spec : random_specs(62, 150)) {
        const auto tails = t_alpha(spec.alpha()) + t_alpha(spec.beta()) + t_alpha(spec.gamma());
        EXPECT_TRUE(eq(cubic_chi_statement_form(spec) - cubic_chi(spec), minus_one * tails));
    }
    // The tail is nonzero for (3, 5, 7), so the two forms really differ there.
    const CubicSurfaceSpec spec(Q, 3, 5, 7);
    EXPECT_FALSE(eq(cubic_chi_statement_form(spec), cubic_chi(spec)));
}

TEST(CubicSurface, CorrectedClosedFormMatchesThirdPower)
{
    for (const auto& spec : random_specs(63, 120)) {
        const auto result = cubic_sym3(spec);
        EXPECT_EQ(result.computed.rank(), 165);
        EXPECT_EQ(result.printed.rank(), 165);
        EXPECT_TRUE(eq(result.computed, cubic_sym3_corrected(spec)));
    }
}

TEST(CubicSurface, PrintedClosedFormFailsOnSignature)
{
    // For positive parameters the signature alone separates the two.
    const CubicSurfaceSpec spec(Q, 3, 5, 7);
    const auto result = cubic_sym3(spec);
    EXPECT_FALSE(result.equal);
    EXPECT_EQ(sign_hom(result.computed), -45);
    EXPECT_EQ(sign_hom(result.printed), -33);
    // The signature of a_3 is the coefficient of t^3 in (1-t)^(-2)(1+t)^(-7).
    EXPECT_EQ(sign_hom(result.computed), integer_binomial_series(2, 7, 3)[3]);
}

TEST(CubicSurface, ExpansionSteps)
{
    for (const auto& spec : random_specs(64, 60)) {
        const auto steps = cubic_sym3_steps(spec);
        ASSERT_EQ(steps.size(), 5U);
        EXPECT_TRUE(steps[0].holds) << steps[0].label;
        EXPECT_TRUE(steps[1].holds) << steps[1].label;
        EXPECT_TRUE(steps[4].holds) << steps[4].label;
    }
    // With parameters 3, 5, 7 the pair-term line and the tail line both fail.
    const auto steps = cubic_sym3_steps(CubicSurfaceSpec(Q, 3, 5, 7));
    EXPECT_FALSE(steps[2].holds);
    EXPECT_FALSE(steps[3].holds);
}

TEST(CubicSurface, OtherFields)
{
    const auto f7 = BaseField::prime_field(7);
    const CubicSurfaceSpec spec(f7, 3, 5, 6);
    EXPECT_TRUE(eq(cubic_sym3(spec).computed, cubic_sym3_corrected(spec)));
    const auto r = BaseField::reals();
    const CubicSurfaceSpec real_spec(r, -1, -2, -3);
    EXPECT_TRUE(eq(cubic_sym3(real_spec).computed, cubic_sym3_corrected(real_spec)));
}

TEST(CubicSurface, Errors)
{
    try {
        (void)CubicSurfaceSpec(Q, 3, 4, 5);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TrivialClass);
    }
    try {
        (void)CubicSurfaceSpec(square_class(Q, 3), square_class(Q, 5), square_class(BaseField::reals(), -1));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
}
