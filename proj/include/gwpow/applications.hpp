#pragma once

// The cubic surface X = Bl_Y(P^2), Y = Spec k(sqrt a) + Spec k(sqrt b) + Spec k(sqrt c),
// and chi of its third symmetric power.

#include <string>
#include <vector>

#include "gwpow/gw.hpp"
#include "gwpow/k0var.hpp"
#include "gwpow/power.hpp"

namespace gwpow {

class CubicSurfaceSpec {
public:
    CubicSurfaceSpec(const SquareClass& alpha, const SquareClass& beta, const SquareClass& gamma)
        : alpha_(alpha), beta_(beta), gamma_(gamma)
    {
        require_same_field(alpha.field(), beta.field());
        require_same_field(alpha.field(), gamma.field());
        for (const auto* c : {&alpha_, &beta_, &gamma_}) {
            if (c->is_trivial()) {
                fail(ErrorKind::TrivialClass, "cubic surface parameters must be nonsquares");
            }
        }
    }

    CubicSurfaceSpec(const BaseField& field, Int alpha, Int beta, Int gamma)
        : CubicSurfaceSpec(square_class(field, alpha), square_class(field, beta), square_class(field, gamma))
    {
    }

    [[nodiscard]] const BaseField& field() const noexcept { return alpha_.field(); }
    [[nodiscard]] const SquareClass& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const SquareClass& beta() const noexcept { return beta_; }
    [[nodiscard]] const SquareClass& gamma() const noexcept { return gamma_; }

private:
    SquareClass alpha_;
    SquareClass beta_;
    SquareClass gamma_;
};

/// [Y], the six blown-up points
inline K0Class exceptional_centre(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    K0Class y(k);
    for (const auto& c : {spec.alpha(), spec.beta(), spec.gamma()}) {
        y += spec_algebra(SqClassSubgroup(k, {c}));
    }
    return y;
}

inline K0Class cubic_surface_class(const CubicSurfaceSpec& spec)
{
    return blowup_class(proj_space(spec.field(), 2), exceptional_centre(spec), 2);
}

/// chi(X) = chi(P^2) + <-1> chi(Y), evaluated from the class of X.
inline GWElement cubic_chi(const CubicSurfaceSpec& spec)
{
    return chi(cubic_surface_class(spec));
}

/// <-2a> + <-2b> + <-2c>
inline GWElement cubic_phi(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    const auto minus_two = square_class(k, -2);
    GWElement phi(k);
    for (const auto& c : {spec.alpha(), spec.beta(), spec.gamma()}) {
        phi.accumulate(minus_two * c, 1);
    }
    return phi;
}

/// 2H + <-1> + <-2> + phi
inline GWElement cubic_chi_proof_form(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    return GWElement::hyperbolic(k, 2) + GWElement::form(k, -1) + GWElement::form(k, -2) + cubic_phi(spec);
}

/// 2<1> + 4<-1> + <-a> + <-b> + <-c>
inline GWElement cubic_chi_statement_form(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    const auto minus_one = square_class(k, -1);
    auto x = GWElement::form(k, 1, 2) + GWElement::form(k, -1, 4);
    for (const auto& c : {spec.alpha(), spec.beta(), spec.gamma()}) {
        x.accumulate(minus_one * c, 1);
    }
    return x;
}

/// The closed expression for chi(X^(3)):
///   60H + 11<-1> + 3<-2> + 7 phi + (<-a> + <-b> + <-c>)
///   + (<1> + <2>)(<ab> + <ac> + <bc>) + <-2abc> + t_ab + t_bc + t_ac
inline GWElement cubic_sym3_printed(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    const auto& a = spec.alpha();
    const auto& b = spec.beta();
    const auto& c = spec.gamma();
    const auto minus_one = square_class(k, -1);

    auto x = GWElement::hyperbolic(k, 60) + GWElement::form(k, -1, 11) + GWElement::form(k, -2, 3);
    x += 7 * cubic_phi(spec);
    x += GWElement::form(minus_one * a) + GWElement::form(minus_one * b) + GWElement::form(minus_one * c);
    x += (GWElement::one(k) + GWElement::form(k, 2)) *
         (GWElement::form(a * b) + GWElement::form(a * c) + GWElement::form(b * c));
    x += GWElement::form(square_class(k, -2) * a * b * c);
    x += t_alpha(a * b) + t_alpha(b * c) + t_alpha(a * c);
    return x;
}

/// The printed expression with its two slips repaired: the pair terms carry
/// (<-1> + <-2>) instead of (<1> + <2>), and the torsion tail is t_abc.
inline GWElement cubic_sym3_corrected(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    const auto& a = spec.alpha();
    const auto& b = spec.beta();
    const auto& c = spec.gamma();
    const auto minus_one = square_class(k, -1);

    auto x = GWElement::hyperbolic(k, 60) + GWElement::form(k, -1, 11) + GWElement::form(k, -2, 3);
    x += 7 * cubic_phi(spec);
    x += GWElement::form(minus_one * a) + GWElement::form(minus_one * b) + GWElement::form(minus_one * c);
    x += (GWElement::form(k, -1) + GWElement::form(k, -2)) *
         (GWElement::form(a * b) + GWElement::form(a * c) + GWElement::form(b * c));
    x += GWElement::form(square_class(k, -2) * a * b * c);
    x += t_alpha(a * b * c);
    return x;
}

struct CubicSym3 {
    GWElement computed; ///< a_3(cubic_chi)
    GWElement printed;  ///< cubic_sym3_printed
    bool equal;
};

inline CubicSym3 cubic_sym3(const CubicSurfaceSpec& spec)
{
    auto computed = a_n(cubic_chi(spec), 3);
    auto printed = cubic_sym3_printed(spec);
    const bool equal = eq(computed, printed);
    return CubicSym3{std::move(computed), std::move(printed), equal};
}

struct IdentityCheck {
    std::string label;
    GWElement lhs;
    GWElement rhs;
    bool holds;
};

/// The four terms of the additive expansion of a_3(psi + phi), psi = 2H + <-1> + <-2>,
/// each against its closed value.
inline std::vector<IdentityCheck> cubic_sym3_steps(const CubicSurfaceSpec& spec)
{
    const auto& k = spec.field();
    const auto& a = spec.alpha();
    const auto& b = spec.beta();
    const auto& c = spec.gamma();
    const auto minus_one = square_class(k, -1);
    const auto psi = GWElement::hyperbolic(k, 2) + GWElement::form(k, -1) + GWElement::form(k, -2);
    const auto phi = cubic_phi(spec);

    std::vector<IdentityCheck> out;
    auto add = [&out](std::string label, GWElement lhs, GWElement rhs) {
        const bool holds = eq(lhs, rhs);
        out.push_back(IdentityCheck{std::move(label), std::move(lhs), std::move(rhs), holds});
    };

    add("a_3(psi) = 24H + 8<-1>", a_n(psi, 3), GWElement::hyperbolic(k, 24) + GWElement::form(k, -1, 8));
    add("a_2(psi) phi = 24H + 4 phi + <2> phi", a_n(psi, 2) * phi,
        GWElement::hyperbolic(k, 24) + 4 * phi + GWElement::form(k, 2) * phi);
    add("psi a_2(phi) = 12H + (<-1> + <-2>)(3<1> + <-ab> + <-bc> + <-ac>)", psi * a_n(phi, 2),
        GWElement::hyperbolic(k, 12) +
            (GWElement::form(k, -1) + GWElement::form(k, -2)) *
                (GWElement::form(k, 1, 3) + GWElement::form(minus_one * a * b) + GWElement::form(minus_one * b * c) +
                 GWElement::form(minus_one * a * c)));
    add("a_3(phi) = 3 phi + <-2abc> + t_ab + t_bc + t_ac", a_n(phi, 3),
        3 * phi + GWElement::form(square_class(k, -2) * a * b * c) + t_alpha(a * b) + t_alpha(b * c) +
            t_alpha(a * c));
    add("a_3(psi + phi) = a_3(psi) + a_2(psi) phi + psi a_2(phi) + a_3(phi)", a_n(psi + phi, 3),
        a_n(psi, 3) + a_n(psi, 2) * phi + psi * a_n(phi, 2) + a_n(phi, 3));
    return out;
}

} // namespace gwpow
