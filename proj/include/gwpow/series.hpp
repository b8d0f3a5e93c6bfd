#pragma once

// GW(k)-valued truncated power series: geometric powers (1-t)^(-q) and the
// image of the Kapranov zeta function under chi.

#include <cstddef>
#include <string>
#include <vector>

#include "gwpow/gw.hpp"
#include "gwpow/k0var.hpp"
#include "gwpow/power.hpp"
#include "gwpow/truncated_series.hpp"

namespace gwpow {

using GWSeries = TruncatedSeries<GWElement>;

inline const BaseField& field_of(const GWSeries& f)
{
    return f[0].field();
}

inline GWSeries s_add(const GWSeries& f, const GWSeries& g)
{
    require_same_field(field_of(f), field_of(g));
    return f + g;
}

inline GWSeries s_mul(const GWSeries& f, const GWSeries& g)
{
    require_same_field(field_of(f), field_of(g));
    return f * g;
}

inline GWSeries s_inv(const GWSeries& f)
{
    return f.inverse();
}

/// Coefficientwise equality in GW(k).
inline bool series_eq(const GWSeries& f, const GWSeries& g)
{
    if (f.order() != g.order()) {
        return false;
    }
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (!eq(f[n], g[n])) {
            return false;
        }
    }
    return true;
}

/// (1-t)^(-q) := sum_n a_n(q) t^n
inline GWSeries geom_pow(const GWElement& q, std::size_t order)
{
    return power_series(q, order);
}

/// sum_n chi([X^(n)]) t^n with the symmetric powers computed in K_0.
inline GWSeries kapranov_chi_zeta(const K0Class& x, std::size_t order, const OrbitLimits& limits = {})
{
    const auto zeta = kapranov_zeta(x, order, limits);
    std::vector<GWElement> coeffs;
    coeffs.reserve(order + 1);
    for (const auto& c : zeta.coefficients()) {
        coeffs.push_back(chi(c));
    }
    return GWSeries(std::move(coeffs));
}

/// rank applied coefficientwise
inline std::vector<Int> rank_series(const GWSeries& f)
{
    std::vector<Int> out;
    for (const auto& c : f.coefficients()) {
        out.push_back(rank_hom(c));
    }
    return out;
}

/// signature applied coefficientwise
inline std::vector<Int> sign_series(const GWSeries& f)
{
    std::vector<Int> out;
    for (const auto& c : f.coefficients()) {
        out.push_back(sign_hom(c));
    }
    return out;
}

/// Integer coefficients of (1-t)^(-e) (1+t)^(-o) up to `order`; e, o may be negative.
inline std::vector<Int> integer_binomial_series(Int e, Int o, std::size_t order)
{
    // (1 - s t)^(-m) = sum_k binom(-m, k) (-s)^k t^k
    auto expand = [order](Int m, Int s) {
        std::vector<Int> c(order + 1, 0);
        for (std::size_t k = 0; k <= order; ++k) {
            const Int kk = static_cast<Int>(k);
            Int v = arith::falling_binomial(-m, kk);
            if (kk % 2 == 1) {
                v = -v;
            }
            if (s < 0 && kk % 2 == 1) {
                v = -v;
            }
            c[k] = v;
        }
        return c;
    };
    const auto a = expand(e, 1);
    const auto b = expand(o, -1);
    std::vector<Int> out(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i) {
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] = arith::checked_add(out[i + j], arith::checked_mul(a[i], b[j]));
        }
    }
    return out;
}

/// "1 + (⟨1⟩ + ⟨-1⟩)t + ... + O(t^{N+1})"
inline std::string to_string(const GWSeries& f)
{
    std::string out;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (f[n].is_zero_literal()) {
            continue;
        }
        const auto body = to_string(f[n]);
        if (!out.empty()) {
            out += " + ";
        }
        if (n == 0) {
            out += f[n] == GWElement::one(f[n].field()) ? "1" : "(" + body + ")";
            continue;
        }
        if (f[n] != GWElement::one(f[n].field())) {
            out += "(" + body + ")";
        }
        out += n == 1 ? "t" : "t^" + std::to_string(n);
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(t^" + std::to_string(f.order() + 1) + ")";
}

} // namespace gwpow
