#pragma once

/**
 * @file power.hpp
 * @brief The power structure a_n on GW(k).
 *
 * On rank-one forms
 *
 *     a_n(<alpha>) = <alpha^n> + n(n-1)/2 * t_alpha,
 *     t_alpha      = <2> + <alpha> - <1> - <2 alpha>,
 *
 * and a_n extends to all of GW(k) through b_n(r + s) = sum_i b_i(r) b_{n-i}(s).
 * Concretely, sum_n a_n(q) t^n is the product over the terms m<alpha> of q of
 * (sum_k a_k(<alpha>) t^k)^m, with negative m handled by series inversion.
 */

#include <cstddef>
#include <string>

#include "gwpow/arith.hpp"
#include "gwpow/gw.hpp"
#include "gwpow/truncated_series.hpp"

namespace gwpow {

struct PowerContext {
    static constexpr std::size_t default_truncation = 32;

    BaseField field;
    std::size_t truncation = default_truncation;
};

inline GWElement t_alpha(const SquareClass& alpha)
{
    const auto& k = alpha.field();
    const auto two = square_class(k, 2);
    GWElement t(k);
    t.accumulate(two, 1);
    t.accumulate(alpha, 1);
    t.accumulate(SquareClass::one(k), -1);
    t.accumulate(two * alpha, -1);
    return t;
}

/// a_n(<alpha>)
inline GWElement a_line(const SquareClass& alpha, std::size_t n)
{
    const auto& k = alpha.field();
    const auto power = (n % 2 == 0) ? SquareClass::one(k) : alpha;
    const auto pairs = static_cast<Int>(n) * (static_cast<Int>(n) - 1) / 2;
    return GWElement::form(power) + pairs * t_alpha(alpha);
}

/// sum_{k <= order} a_k(<alpha>) t^k
inline TruncatedSeries<GWElement> line_series(const SquareClass& alpha, std::size_t order)
{
    std::vector<GWElement> coeffs;
    coeffs.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        coeffs.push_back(a_line(alpha, k));
    }
    return TruncatedSeries<GWElement>(std::move(coeffs));
}

/// sum_{n <= order} a_n(q) t^n
inline TruncatedSeries<GWElement> power_series(const GWElement& q, std::size_t order)
{
    TruncatedSeries<GWElement> result(order, GWElement::one(q.field()));
    for (const auto& [alpha, m] : q.terms()) {
        result = result * line_series(alpha, order).pow(m);
    }
    return result;
}

inline GWElement a_n(const GWElement& q, std::size_t n, const PowerContext& ctx)
{
    require_same_field(ctx.field, q.field());
    if (n > ctx.truncation) {
        fail(ErrorKind::TruncationExceeded,
             "a_" + std::to_string(n) + " exceeds truncation " + std::to_string(ctx.truncation));
    }
    return power_series(q, n)[n];
}

inline GWElement a_n(const GWElement& q, std::size_t n)
{
    return a_n(q, n, PowerContext{q.field()});
}

/// a_n(m<(-1)^i>) = binom(m+n-1, n) <(-1)^(in)>, with the generalized
/// binomial for m < 0.
inline GWElement a_basic(const BaseField& field, Int m, int i, std::size_t n)
{
    if (i != 0 && i != 1) {
        fail(ErrorKind::OutOfRange, "a_basic needs i in {0, 1}");
    }
    const Int sign = (i == 1 && n % 2 == 1) ? -1 : 1;
    const auto nn = static_cast<Int>(n);
    return GWElement::form(field, sign, arith::falling_binomial(arith::checked_add(m, nn - 1), nn));
}

/// Closed form of a_n(mH). For m < 0 the binomials are binom(-m, i): this is
/// the expansion of (1-t)^(-m) (1-<-1>t)^(-m) and agrees with series inversion.
inline GWElement a_hyperbolic(const BaseField& field, Int m, std::size_t n)
{
    GWElement result(field);
    if (m == 0) {
        return n == 0 ? GWElement::one(field) : result;
    }
    const auto nn = static_cast<Int>(n);
    for (Int i = 0; i <= nn; ++i) {
        Int c = 0;
        if (m > 0) {
            c = arith::checked_mul(arith::binomial(m + i - 1, m - 1), arith::binomial(m + nn - i - 1, m - 1));
        } else {
            c = arith::checked_mul(arith::binomial(-m, i), arith::binomial(-m, nn - i));
            if (nn % 2 == 1) {
                c = -c;
            }
        }
        result.accumulate(square_class(field, (nn - i) % 2 == 0 ? 1 : -1), c);
    }
    return result;
}

/// Hyperbolic test: an element eq to (rank/2) H.
inline bool is_hyperbolic(const GWElement& x)
{
    const Int r = x.rank();
    return r % 2 == 0 && eq(x, GWElement::hyperbolic(x.field(), r / 2));
}

} // namespace gwpow
