#pragma once

// Losanitsch's triangle and Euler characteristics of Grassmannians Gr(d, r)
// (d-planes in r-space) and of their symmetric powers.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwpow/arith.hpp"
#include "gwpow/gw.hpp"
#include "gwpow/series.hpp"

namespace gwpow {

struct LosanitschEntry {
    Int e = 0; ///< Losanitsch's triangle, OEIS A034851
    Int o = 0; ///< binom(r, d) - e

    friend bool operator==(const LosanitschEntry&, const LosanitschEntry&) = default;
};

namespace detail {

inline void check_dr(Int d, Int r)
{
    if (r < 0 || d < 0 || d > r) {
        fail(ErrorKind::OutOfRange, "need 0 <= d <= r, got d = " + std::to_string(d) + ", r = " + std::to_string(r));
    }
}

} // namespace detail

/// Rows 0..R of the triangle built from the parity recurrences:
///   d even: e(d,r) = e(d-1,r-1) + e(d,r-1),  o(d,r) = o(d-1,r-1) + o(d,r-1)
///   d odd:  e(d,r) = e(d-1,r-1) + o(d,r-1),  o(d,r) = o(d-1,r-1) + e(d,r-1)
class LosanitschTable {
public:
    explicit LosanitschTable(Int max_row)
    {
        if (max_row < 0) {
            fail(ErrorKind::OutOfRange, "negative row count");
        }
        rows_.resize(static_cast<std::size_t>(max_row) + 1);
        rows_[0] = {LosanitschEntry{1, 0}};
        for (Int r = 1; r <= max_row; ++r) {
            auto& row = rows_[static_cast<std::size_t>(r)];
            const auto& prev = rows_[static_cast<std::size_t>(r - 1)];
            row.resize(static_cast<std::size_t>(r) + 1);
            row[0] = {1, 0};
            for (Int d = 1; d <= r; ++d) {
                const auto left = prev[static_cast<std::size_t>(d - 1)];
                const auto up = d <= r - 1 ? prev[static_cast<std::size_t>(d)] : LosanitschEntry{};
                auto& cell = row[static_cast<std::size_t>(d)];
                if (d % 2 == 0) {
                    cell = {arith::checked_add(left.e, up.e), arith::checked_add(left.o, up.o)};
                } else {
                    cell = {arith::checked_add(left.e, up.o), arith::checked_add(left.o, up.e)};
                }
            }
        }
    }

    [[nodiscard]] Int max_row() const noexcept { return static_cast<Int>(rows_.size()) - 1; }

    [[nodiscard]] const LosanitschEntry& at(Int d, Int r) const
    {
        detail::check_dr(d, r);
        if (r > max_row()) {
            fail(ErrorKind::OutOfRange, "row " + std::to_string(r) + " beyond table");
        }
        return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
    }

private:
    std::vector<std::vector<LosanitschEntry>> rows_;
};

/// e = (binom(r,d) + 1_A(r,d) binom(floor(r/2), floor(d/2))) / 2, where
/// A = {r odd} u {r and d both even}.
inline LosanitschEntry losanitsch_closed(Int d, Int r)
{
    detail::check_dr(d, r);
    const Int total = arith::binomial(r, d);
    const bool in_a = (r % 2 == 1) || (r % 2 == 0 && d % 2 == 0);
    const Int correction = in_a ? arith::binomial(r / 2, d / 2) : 0;
    return {(total + correction) / 2, (total - correction) / 2};
}

/// (e(d,r), o(d,r)); the recurrence and the closed formula are both evaluated
/// and must agree.
inline LosanitschEntry losanitsch(Int d, Int r)
{
    detail::check_dr(d, r);
    const auto by_recurrence = LosanitschTable(r).at(d, r);
    const auto by_formula = losanitsch_closed(d, r);
    if (by_recurrence != by_formula) {
        throw std::logic_error("Losanitsch recurrence and closed formula disagree at (" + std::to_string(d) + ", " +
                               std::to_string(r) + ")");
    }
    return by_formula;
}

/// chi(Gr(d,r)) = e(d,r)<1> + o(d,r)<-1>
inline GWElement chi_grassmannian_closed(const BaseField& field, Int d, Int r)
{
    const auto [e, o] = losanitsch(d, r);
    return GWElement::form(field, 1, e) + GWElement::form(field, -1, o);
}

/// chi(Gr(d,r)) = chi(Gr(d-1,r-1)) + <(-1)^d> chi(Gr(d,r-1)), from the closed
/// immersion Gr(d-1,r-1) -> Gr(d,r) with complement an affine bundle.
inline GWElement chi_grassmannian_recursive(const BaseField& field, Int d, Int r)
{
    detail::check_dr(d, r);
    // table[r'][d'] for r' <= r
    std::vector<std::vector<GWElement>> table;
    for (Int rr = 0; rr <= r; ++rr) {
        std::vector<GWElement> row;
        for (Int dd = 0; dd <= rr; ++dd) {
            if (dd == 0) {
                row.push_back(GWElement::one(field));
                continue;
            }
            auto value = table[static_cast<std::size_t>(rr - 1)][static_cast<std::size_t>(dd - 1)];
            if (dd <= rr - 1) {
                value += GWElement::form(field, dd % 2 == 0 ? 1 : -1) *
                         table[static_cast<std::size_t>(rr - 1)][static_cast<std::size_t>(dd)];
            }
            row.push_back(std::move(value));
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
}

/// chi(Gr(d,r)); the recursion and the closed form must be eq.
inline GWElement chi_grassmannian(const BaseField& field, Int d, Int r)
{
    auto closed = chi_grassmannian_closed(field, d, r);
    if (!eq(closed, chi_grassmannian_recursive(field, d, r))) {
        throw std::logic_error("Grassmannian recursion and closed form disagree");
    }
    return closed;
}

/// chi(Gr(d,r)^(n)) = sum_i binom(e+i-1, i) binom(o+n-i-1, n-i) <(-1)^(n-i)>
inline GWElement chi_sym_grassmannian(const BaseField& field, Int d, Int r, Int n)
{
    if (n < 0) {
        fail(ErrorKind::OutOfRange, "symmetric power degree must be nonnegative");
    }
    const auto [e, o] = losanitsch(d, r);
    GWElement result(field);
    for (Int i = 0; i <= n; ++i) {
        const Int c = arith::checked_mul(arith::multichoose(e, i), arith::multichoose(o, n - i));
        result.accumulate(square_class(field, (n - i) % 2 == 0 ? 1 : -1), c);
    }
    return result;
}

/// (1-t)^(-e(d,r)) (1-<-1>t)^(-o(d,r)) to order N
inline GWSeries grassmann_zeta(const BaseField& field, Int d, Int r, std::size_t order)
{
    const auto [e, o] = losanitsch(d, r);
    const auto one_minus_t = GWSeries::linear(order, GWElement::form(field, 1, -1));
    const auto one_minus_neg_t = GWSeries::linear(order, GWElement::form(field, -1, -1));
    return one_minus_t.pow(-e) * one_minus_neg_t.pow(-o);
}

/// Signature of chi(Gr(d,r)): 0 if r even and d odd, else binom(floor(r/2), floor(d/2)).
inline Int real_grassmannian_euler(Int d, Int r)
{
    detail::check_dr(d, r);
    if (r % 2 == 0 && d % 2 == 1) {
        return 0;
    }
    return arith::binomial(r / 2, d / 2);
}

} // namespace gwpow
