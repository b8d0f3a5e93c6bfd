#pragma once

// Eagerly truncated power series sum_{n<=N} c_n t^n over a commutative
// coefficient ring R. The ring is reached through ADL hooks:
//   zero_like(r), one_like(r)  -- additive / multiplicative identity next to r
//   is_one(r)                  -- r equals 1 in the ring (not just literally)

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gwpow/arith.hpp"
#include "gwpow/error.hpp"

namespace gwpow {

template <class R>
concept SeriesCoefficient = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { is_one(a) } -> std::convertible_to<bool>;
};

template <SeriesCoefficient R>
class TruncatedSeries {
public:
    /// `constant` + O(t^(order+1)).
    TruncatedSeries(std::size_t order, const R& constant) : coeffs_(order + 1, zero_like(constant))
    {
        coeffs_[0] = constant;
    }

    /// Coefficients c_0..c_N; must be nonempty.
    explicit TruncatedSeries(std::vector<R> coefficients) : coeffs_(std::move(coefficients))
    {
        if (coeffs_.empty()) {
            fail(ErrorKind::OutOfRange, "a series needs at least its constant term");
        }
    }

    /// 1 + c t
    static TruncatedSeries linear(std::size_t order, const R& c)
    {
        TruncatedSeries s(order, one_like(c));
        if (order >= 1) {
            s.coeffs_[1] = c;
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    R& operator[](std::size_t n) { return coeffs_.at(n); }
    [[nodiscard]] const std::vector<R>& coefficients() const noexcept { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_orders(a, b);
        auto r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_orders(a, b);
        auto r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_orders(a, b);
        const auto n = a.coeffs_.size();
        TruncatedSeries r(std::vector<R>(n, zero_like(a.coeffs_[0])));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j < n; ++j) {
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Multiplicative inverse; the constant term must equal 1 in R.
    [[nodiscard]] TruncatedSeries inverse() const
    {
        if (!is_one(coeffs_[0])) {
            fail(ErrorKind::NotAUnit, "series inversion needs constant term 1");
        }
        const auto n = coeffs_.size();
        TruncatedSeries g(order(), one_like(coeffs_[0]));
        for (std::size_t k = 1; k < n; ++k) {
            auto acc = zero_like(coeffs_[0]);
            for (std::size_t i = 1; i <= k; ++i) {
                acc = acc + coeffs_[i] * g.coeffs_[k - i];
            }
            g.coeffs_[k] = -acc;
        }
        return g;
    }

    /// this^m; negative m goes through inverse().
    [[nodiscard]] TruncatedSeries pow(Int m) const
    {
        if (m < 0) {
            return inverse().pow(-m);
        }
        TruncatedSeries result(order(), one_like(coeffs_[0]));
        TruncatedSeries base = *this;
        while (m > 0) {
            if (m & 1) {
                result = result * base;
            }
            m >>= 1;
            if (m > 0) {
                base = base * base;
            }
        }
        return result;
    }

private:
    static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size()) {
            fail(ErrorKind::OutOfRange, "series orders differ: " + std::to_string(a.order()) + " vs " +
                                            std::to_string(b.order()));
        }
    }

    std::vector<R> coeffs_;
};

} // namespace gwpow
