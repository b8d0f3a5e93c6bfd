#pragma once

// The acceptance suite: numbered criteria, each a batch of exact checks, plus
// a diagnostic report of known discrepancies in the printed formulas.

#include <array>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gwpow/gwpow.hpp"
#include "gwpow/verify/generators.hpp"
#include "gwpow/verify/oracles.hpp"

namespace gwpow::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool report_only = false;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

namespace detail {

inline CriterionResult new_result(int id, std::string title)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++r_.checks;
        if (!ok) {
            r_.failures.push_back(what());
        }
    }

    void check_eq(const GWElement& x, const GWElement& y, const std::string& label)
    {
        check(eq(x, y), [&] { return label + ": " + to_string(x) + " vs " + to_string(y); });
    }

    /// Runs `body`, turning an exception into a failure.
    void guard(const std::string& label, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            ++r_.checks;
            r_.failures.push_back(label + ": threw " + e.what());
        }
    }

private:
    CriterionResult& r_;
};

inline std::string spec_name(const CubicSurfaceSpec& s)
{
    return "(" + std::to_string(s.alpha().rep()) + "," + std::to_string(s.beta().rep()) + "," +
           std::to_string(s.gamma().rep()) + ")";
}

inline std::vector<CubicSurfaceSpec> cubic_specs()
{
    const auto q = BaseField::rationals();
    return {CubicSurfaceSpec(q, 3, 5, 7), CubicSurfaceSpec(q, 3, 5, 15), CubicSurfaceSpec(q, 2, 3, 5),
            CubicSurfaceSpec(q, 5, 13, 17)};
}

} // namespace detail

inline CriterionResult criterion_presentation()
{
    auto r = detail::new_result(1, "GW presentation relations and Hilbert symbol oracle");
    detail::Recorder rec(r);
    Generator gen(0x5eed0001);
    for (const auto& field : {BaseField::rationals(), BaseField::prime_field(7)}) {
        const Int p = field.kind() == BaseField::Kind::PrimeField ? field.characteristic() : 0;
        auto draw = [&]() -> Rational {
            for (;;) {
                const auto v = gen.rational(60, 12);
                if (p == 0 || (v.num % p != 0 && v.den % p != 0)) {
                    return v;
                }
            }
        };
        for (int i = 0; i < 200; ++i) {
            rec.guard("relations over " + field.name(), [&] {
                const auto a = draw();
                const auto b = draw();
                const auto fa = GWElement::form(square_class(field, a));
                const auto fb = GWElement::form(square_class(field, b));
                rec.check_eq(fa, GWElement::form(square_class(field, a * b * b)), "(1) <a> = <ab^2>");
                rec.check_eq(fa * fb, GWElement::form(square_class(field, a * b)), "(2) <a><b> = <ab>");
                rec.check_eq(fa + GWElement::form(square_class(field, Rational{-1} * a)),
                             GWElement::one(field) + GWElement::form(field, -1), "(3) <a> + <-a> = H");
                const auto s = a + b;
                if (!s.is_zero() && (p == 0 || s.num % p != 0)) {
                    rec.check_eq(fa + fb,
                                 GWElement::form(square_class(field, s)) + GWElement::form(square_class(field, a * b * s)),
                                 "(4) <a> + <b> = <a+b> + <ab(a+b)>");
                }
            });
        }
    }
    for (Int p : {0, 2, 3, 5, 7}) {
        const auto place = p == 0 ? Place::real() : Place::prime(p);
        for (Int a = -30; a <= 30; ++a) {
            for (Int b = -30; b <= 30; ++b) {
                if (a == 0 || b == 0) {
                    continue;
                }
                const int lib = hilbert_symbol(Rational{a}, Rational{b}, place);
                const int ref = hilbert_by_search(a, b, p);
                rec.check(lib == ref, [&] {
                    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + place.name() + " = " +
                           std::to_string(lib) + ", oracle " + std::to_string(ref);
                });
            }
        }
    }
    return r;
}

inline CriterionResult criterion_power_axioms()
{
    auto r = detail::new_result(2, "Power structure axioms");
    detail::Recorder rec(r);
    Generator gen(0x5eed0002);
    const auto q = BaseField::rationals();
    const auto zero = GWElement::zero(q);
    const auto one = GWElement::one(q);
    for (std::size_t n = 1; n <= 8; ++n) {
        rec.check_eq(a_n(zero, n), zero, "a_" + std::to_string(n) + "(0) = 0");
        rec.check_eq(a_n(one, n), one, "a_" + std::to_string(n) + "(1) = 1");
    }
    for (int i = 0; i < 100; ++i) {
        const auto x = gen.element(q);
        const auto y = gen.element(q);
        rec.guard("pair " + std::to_string(i), [&] {
            rec.check_eq(a_n(x, 0), one, "a_0(x) = 1");
            rec.check_eq(a_n(x, 1), x, "a_1(x) = x");
            const auto sx = power_series(x, 8);
            const auto sy = power_series(y, 8);
            const auto sxy = power_series(x + y, 8);
            for (std::size_t n = 0; n <= 8; ++n) {
                GWElement conv(q);
                for (std::size_t k = 0; k <= n; ++k) {
                    conv += sx[k] * sy[n - k];
                }
                rec.check_eq(sxy[n], conv,
                             "a_" + std::to_string(n) + "(" + to_string(x) + " + " + to_string(y) + ") convolution");
            }
        });
    }
    return r;
}

inline CriterionResult criterion_twist()
{
    auto r = detail::new_result(3, "a_n(<-1> q) = <(-1)^n> a_n(q)");
    detail::Recorder rec(r);
    Generator gen(0x5eed0003);
    for (const auto& field : {BaseField::rationals(), BaseField::prime_field(7), BaseField::reals()}) {
        const auto minus = GWElement::form(field, -1);
        for (int i = 0; i < 60; ++i) {
            const auto x = gen.element(field);
            rec.guard("twist", [&] {
                const auto lhs = power_series(minus * x, 6);
                const auto rhs = power_series(x, 6);
                for (std::size_t n = 0; n <= 6; ++n) {
                    const auto sign = GWElement::form(field, n % 2 == 0 ? 1 : -1);
                    rec.check_eq(lhs[n], sign * rhs[n], "n = " + std::to_string(n) + ", q = " + to_string(x));
                }
            });
        }
    }
    return r;
}

inline CriterionResult criterion_closed_forms()
{
    auto r = detail::new_result(4, "Closed forms for a_n(m<(-1)^i>) and a_n(mH)");
    detail::Recorder rec(r);
    for (const auto& field : {BaseField::rationals(), BaseField::prime_field(5)}) {
        for (Int m = -4; m <= 5; ++m) {
            rec.guard("m = " + std::to_string(m), [&] {
                for (int i = 0; i <= 1; ++i) {
                    const auto series = power_series(GWElement::form(field, i == 0 ? 1 : -1, m), 8);
                    for (std::size_t n = 0; n <= 8; ++n) {
                        rec.check_eq(a_basic(field, m, i, n), series[n],
                                     "a_" + std::to_string(n) + "(" + std::to_string(m) + "<" + (i == 0 ? "1" : "-1") +
                                         ">)");
                    }
                }
                const auto series = power_series(GWElement::hyperbolic(field, m), 8);
                for (std::size_t n = 0; n <= 8; ++n) {
                    rec.check_eq(a_hyperbolic(field, m, n), series[n],
                                 "a_" + std::to_string(n) + "(" + std::to_string(m) + "H)");
                    if (n % 2 == 1 && n <= 7) {
                        rec.check(is_hyperbolic(series[n]), [&] {
                            return "a_" + std::to_string(n) + "(" + std::to_string(m) +
                                   "H) not hyperbolic: " + to_string(series[n]);
                        });
                    }
                }
            });
        }
    }
    return r;
}

inline CriterionResult criterion_sym_powers()
{
    auto r = detail::new_result(5, "chi of symmetric powers equals a_n of chi");
    detail::Recorder rec(r);
    const auto q = BaseField::rationals();
    auto groups = [&](std::initializer_list<std::initializer_list<Int>> list) {
        std::vector<SqClassSubgroup> out;
        for (const auto& g : list) {
            out.push_back(SqClassSubgroup::from_integers(q, g));
        }
        return out;
    };
    const auto small = groups({{}, {-1}, {2}, {3}, {-3}, {6}, {-2}, {-1, 2}, {2, 3}, {3, 5}, {-1, 3}, {-2, 5}, {6, 10}});
    const auto rank3 = groups({{-1, 2, 3}, {3, 5, 7}, {-1, 2, 5}});

    auto run = [&](const K0Class& x, Int max_n, bool with_oracle) {
        const auto label = to_string(x);
        rec.guard(label, [&] {
            const auto chi_x = chi(x);
            const auto expected = power_series(chi_x, static_cast<std::size_t>(max_n));
            for (Int n = 0; n <= max_n; ++n) {
                const auto sym = sym_power(x, n);
                rec.check_eq(chi(sym), expected[static_cast<std::size_t>(n)],
                             "chi(S^" + std::to_string(n) + "(" + label + "))");
                if (with_oracle) {
                    const auto by_points = sym_power_by_points(x, n);
                    rec.check(sym == by_points, [&] {
                        return "S^" + std::to_string(n) + "(" + label + ") = " + to_string(sym) +
                               ", point enumeration " + to_string(by_points);
                    });
                }
            }
        });
    };

    for (Int l = 0; l <= 2; ++l) {
        for (const auto& g : small) {
            run(K0Class::monomial(l, g), 6, true);
        }
        for (const auto& g : rank3) {
            run(K0Class::monomial(l, g), 4, true);
        }
    }
    run(proj_space(q, 1), 5, true);
    run(proj_space(q, 2), 5, true);
    run(proj_space(q, 3), 5, true);
    run(torus_1d(square_class(q, 3)), 5, false);
    run(nodal_union(q), 5, false);
    run(cuspidal_cubic(q), 5, true);
    return r;
}

inline CriterionResult criterion_grassmannians()
{
    auto r = detail::new_result(6, "Grassmannians");
    detail::Recorder rec(r);
    const auto q = BaseField::rationals();
    const LosanitschTable table(20);
    for (Int rr = 0; rr <= 20; ++rr) {
        for (Int d = 0; d <= rr; ++d) {
            rec.check(table.at(d, rr) == losanitsch_closed(d, rr),
                      [&] { return "Losanitsch (" + std::to_string(d) + ", " + std::to_string(rr) + ")"; });
        }
    }
    for (Int rr = 0; rr <= 8; ++rr) {
        for (Int d = 0; d <= rr; ++d) {
            rec.check_eq(chi_grassmannian_recursive(q, d, rr), chi_grassmannian_closed(q, d, rr),
                         "chi(Gr(" + std::to_string(d) + "," + std::to_string(rr) + ")) recursion vs closed");
        }
    }
    rec.check_eq(chi_grassmannian(q, 2, 4), GWElement::form(q, 1, 4) + GWElement::form(q, -1, 2), "chi(Gr(2,4))");
    constexpr std::size_t order = 10;
    for (Int rr = 0; rr <= 6; ++rr) {
        for (Int d = 0; d <= rr; ++d) {
            const auto tag = "(" + std::to_string(d) + "," + std::to_string(rr) + ")";
            rec.guard(tag, [&] {
                const auto zeta = grassmann_zeta(q, d, rr, order);
                const auto powers = power_series(chi_grassmannian(q, d, rr), order);
                for (std::size_t n = 0; n <= order; ++n) {
                    const auto sym = chi_sym_grassmannian(q, d, rr, static_cast<Int>(n));
                    rec.check_eq(zeta[n], sym, "zeta coefficient " + std::to_string(n) + " " + tag);
                    rec.check_eq(sym, powers[n], "a_" + std::to_string(n) + " " + tag);
                }
                const auto [e, o] = losanitsch(d, rr);
                rec.check(rank_series(zeta) == integer_binomial_series(arith::binomial(rr, d), 0, order),
                          [&] { return "rank series " + tag; });
                rec.check(sign_series(zeta) == integer_binomial_series(e, o, order),
                          [&] { return "sign series " + tag; });
            });
        }
    }
    return r;
}

inline CriterionResult criterion_cubic_surface()
{
    auto r = detail::new_result(7, "Cubic surface third symmetric power");
    detail::Recorder rec(r);
    const auto q = BaseField::rationals();
    const auto psi = GWElement::hyperbolic(q, 2) + GWElement::form(q, -1) + GWElement::form(q, -2);
    rec.check_eq(a_n(psi, 3), GWElement::hyperbolic(q, 24) + GWElement::form(q, -1, 8), "a_3(2H + <-1> + <-2>)");
    for (const auto& spec : detail::cubic_specs()) {
        const auto name = detail::spec_name(spec);
        const auto& a = spec.alpha();
        const auto& b = spec.beta();
        const auto& c = spec.gamma();
        const auto phi = cubic_phi(spec);
        rec.check_eq(a_n(phi, 3),
                     3 * phi + GWElement::form(square_class(q, -2) * a * b * c) + t_alpha(a * b) + t_alpha(b * c) +
                         t_alpha(a * c),
                     "a_3(phi) " + name);
        const auto result = cubic_sym3(spec);
        rec.check(result.equal, [&] {
            return "printed chi(X^(3)) vs a_3(chi(X)) " + name + ": difference " +
                   to_string(result.printed - result.computed) + " has signature " +
                   std::to_string(sign_hom(result.printed - result.computed));
        });
        rec.check(result.computed.rank() == 165 && result.printed.rank() == 165,
                  [&] { return "rank 165 " + name; });
    }
    return r;
}

inline CriterionResult criterion_torsion()
{
    auto r = detail::new_result(8, "Torsion of t_alpha");
    detail::Recorder rec(r);
    const auto q = BaseField::rationals();
    const auto zero = GWElement::zero(q);
    rec.check_eq(t_alpha(square_class(q, 1)), zero, "t_1");
    rec.check_eq(t_alpha(square_class(q, -1)), zero, "t_-1");
    for (Int a : {2, 3, 5, 7, 15}) {
        const auto alpha = square_class(q, a);
        rec.check_eq(2 * t_alpha(alpha), zero, "2 t_" + std::to_string(a));
        rec.check_eq(t_alpha(square_class(q, -a)), t_alpha(alpha), "t_-" + std::to_string(a));
    }
    const auto t3 = t_alpha(square_class(q, 3));
    rec.check(!eq(t3, zero), [] { return "t_3 should be nonzero over Q"; });
    // The local invariant separating t_3 from 0 sits at 3.
    GWElement pos(q);
    GWElement neg(q);
    for (const auto& [cls, m] : t3.terms()) {
        (m > 0 ? pos : neg).accumulate(cls, m > 0 ? m : -m);
    }
    rec.check(hasse_invariant(pos, Place::prime(3)) != hasse_invariant(neg, Place::prime(3)),
              [] { return "Hasse invariant at 3 should distinguish t_3 from 0"; });
    return r;
}

/// Not pass/fail: verdicts on the formulas whose printed form is in doubt.
inline CriterionResult diagnostic_report()
{
    auto r = detail::new_result(9, "Diagnostic report");
    r.report_only = true;
    const auto q = BaseField::rationals();
    auto yes = [](bool b) { return std::string(b ? "eq" : "NOT eq"); };
    for (const auto& spec : detail::cubic_specs()) {
        const auto name = detail::spec_name(spec);
        const auto statement = cubic_chi_statement_form(spec);
        const auto proof = cubic_chi_proof_form(spec);
        const bool same = eq(statement, proof);
        const auto& a = spec.alpha();
        const auto& b = spec.beta();
        const auto& c = spec.gamma();
        const bool torsion = eq(statement - proof, GWElement::form(q, -1) * (t_alpha(a) + t_alpha(b) + t_alpha(c)));
        r.notes.push_back("chi(X) " + name + ": statement 2<1> + 4<-1> + <-a> + <-b> + <-c> is " + yes(same) +
                          " to proof form 2H + <-1> + <-2> + <-2a> + <-2b> + <-2c>; difference eq <-1>(t_a + t_b + t_c): " +
                          (torsion ? "yes" : "no"));
        r.notes.push_back("chi(X) " + name + ": assembled chi(Bl_Y P^2) is " + yes(eq(cubic_chi(spec), proof)) +
                          " to the proof form");
    }
    for (const auto& spec : detail::cubic_specs()) {
        const auto name = detail::spec_name(spec);
        for (const auto& step : cubic_sym3_steps(spec)) {
            r.notes.push_back("a_3 expansion " + name + ": " + step.label + " -> " + (step.holds ? "holds" : "FAILS"));
        }
        const auto result = cubic_sym3(spec);
        r.notes.push_back("chi(X^(3)) " + name + ": printed expression is " + yes(result.equal) +
                          " to a_3(chi(X)); corrected expression (pair terms times <-1> + <-2>, tail t_abc) is " +
                          yes(eq(result.computed, cubic_sym3_corrected(spec))));
    }
    {
        bool minus_matches = true;
        bool printed_matches = false;
        for (Int rr = 1; rr <= 6; ++rr) {
            for (Int d = 0; d <= rr; ++d) {
                const Int total = arith::binomial(rr, d);
                const auto ranks = rank_series(grassmann_zeta(q, d, rr, 8));
                minus_matches = minus_matches && ranks == integer_binomial_series(total, 0, 8);
                printed_matches = printed_matches || ranks == integer_binomial_series(-total, 0, 8);
            }
        }
        r.notes.push_back(std::string("complex points: printed exponent (1-t)^{n choose d} has no minus sign and uses n "
                                      "for r; rank series equals (1-t)^{-binom(r,d)} for 1 <= r <= 6: ") +
                          (minus_matches ? "yes" : "no") + "; equals (1-t)^{binom(r,d)} anywhere: " +
                          (printed_matches ? "yes" : "no"));
    }
    {
        const auto z = power_series(GWElement::hyperbolic(q, -1), 2);
        const auto falling1 = GWElement::hyperbolic(q, 1);
        const auto falling2 = GWElement::form(q, 1, 2) + GWElement::form(q, -1);
        r.notes.push_back("a_n(mH), m < 0: falling-factorial binomials give a_1(-H) = H and a_2(-H) = 2<1> + <-1>; "
                          "series inversion gives " +
                          to_string(z[1]) + " and " + to_string(z[2]) + " (" +
                          (eq(z[1], falling1) || eq(z[2], falling2) ? "agree" : "disagree") +
                          "); closed form uses binom(-m, i)");
    }
    return r;
}

inline std::vector<CriterionResult> run_acceptance()
{
    return {criterion_presentation(), criterion_power_axioms(), criterion_twist(), criterion_closed_forms(),
            criterion_sym_powers(),  criterion_grassmannians(), criterion_cubic_surface(), criterion_torsion(),
            diagnostic_report()};
}

/// One line per criterion: "PASS 1 title (N checks)".
inline std::string summary_line(const CriterionResult& r)
{
    std::ostringstream out;
    if (r.report_only) {
        out << "REPORT " << r.id << " " << r.title << " (" << r.notes.size() << " entries)";
    } else {
        out << (r.passed() ? "PASS " : "FAIL ") << r.id << " " << r.title << " (" << r.checks << " checks";
        if (!r.passed()) {
            out << ", " << r.failures.size() << " failed";
        }
        out << ")";
    }
    return out.str();
}

} // namespace gwpow::verify
