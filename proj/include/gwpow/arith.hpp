#pragma once

// Exact 64-bit integer helpers: overflow-checked arithmetic, binomials,
// primality and bounded trial-division factorization.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gwpow/error.hpp"

namespace gwpow {

using Int = std::int64_t;

namespace arith {

inline Int checked_add(Int a, Int b)
{
    Int r{};
    if (__builtin_add_overflow(a, b, &r)) {
        fail(ErrorKind::Overflow, "integer addition overflow");
    }
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r{};
    if (__builtin_sub_overflow(a, b, &r)) {
        fail(ErrorKind::Overflow, "integer subtraction overflow");
    }
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r{};
    if (__builtin_mul_overflow(a, b, &r)) {
        fail(ErrorKind::Overflow, "integer multiplication overflow");
    }
    return r;
}

inline Int checked_neg(Int a)
{
    return checked_sub(0, a);
}

/// floor(sqrt(n)) for n >= 0.
inline std::uint64_t isqrt(std::uint64_t n)
{
    if (n < 2) {
        return n;
    }
    std::uint64_t x = n;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline bool is_perfect_square(std::uint64_t n)
{
    const auto r = isqrt(n);
    return r * r == n;
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

inline constexpr std::uint64_t default_factor_bound = 1'000'000;

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

struct TrialDivision {
    std::vector<PrimePower> factors;
    std::uint64_t cofactor; ///< 1, or a number all of whose prime factors exceed `cleared`
    std::uint64_t cleared;
};

inline TrialDivision trial_divide(std::uint64_t n, std::uint64_t bound)
{
    if (n == 0) {
        fail(ErrorKind::ZeroInput, "cannot factor zero");
    }
    TrialDivision t{{}, n, 2};
    auto strip = [&](std::uint64_t d) {
        int e = 0;
        while (t.cofactor % d == 0) {
            t.cofactor /= d;
            ++e;
        }
        if (e > 0) {
            t.factors.push_back({d, e});
        }
    };
    strip(2);
    std::uint64_t d = 3;
    for (; d <= bound && d * d <= t.cofactor; d += 2) {
        strip(d);
        t.cleared = d;
    }
    if (d * d > t.cofactor && t.cofactor > 1) {
        // what remains is prime
        t.factors.push_back({t.cofactor, 1});
        t.cofactor = 1;
    }
    return t;
}

} // namespace detail

/// Factor n > 0 by trial division with divisors up to `bound`; a leftover
/// cofactor is accepted when it is prime. Throws FactorizationLimit otherwise.
inline std::vector<PrimePower> factorize(std::uint64_t n, std::uint64_t bound = default_factor_bound)
{
    auto t = detail::trial_divide(n, bound);
    if (t.cofactor > 1) {
        if (!is_prime(t.cofactor)) {
            fail(ErrorKind::FactorizationLimit,
                 "cofactor " + std::to_string(t.cofactor) + " exceeds trial-division bound " + std::to_string(bound));
        }
        t.factors.push_back({t.cofactor, 1});
    }
    return t.factors;
}

/// Split n > 0 as core * s^2 with core squarefree; returns core. A composite
/// cofactor whose prime factors all exceed the trial bound c is still settled
/// when c^3 exceeds it: it is then p^2 or p q with p != q.
inline std::uint64_t squarefree_core(std::uint64_t n, std::uint64_t bound = default_factor_bound)
{
    const auto t = detail::trial_divide(n, bound);
    std::uint64_t core = 1;
    for (const auto& [p, e] : t.factors) {
        if (e % 2 == 1) {
            core *= p;
        }
    }
    const auto c = t.cofactor;
    if (c == 1) {
        return core;
    }
    if (is_prime(c)) {
        return core * c;
    }
    const auto limit = static_cast<uint128>(t.cleared) * t.cleared * t.cleared;
    if (static_cast<uint128>(c) < limit) {
        return is_perfect_square(c) ? core : core * c;
    }
    fail(ErrorKind::FactorizationLimit,
         "cofactor " + std::to_string(c) + " exceeds trial-division bound " + std::to_string(bound));
}

/// binom(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Int binomial(Int n, Int k)
{
    if (n < 0) {
        fail(ErrorKind::OutOfRange, "binomial requires a nonnegative top argument");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i after the division by gcd.
        const Int num = n - k + i;
        const Int g = std::gcd(result, i);
        result = checked_mul(result / g, num / (i / g));
    }
    return result;
}

/// Falling-factorial binomial m(m-1)...(m-k+1)/k!, defined for every integer m.
inline Int falling_binomial(Int m, Int k)
{
    if (k < 0) {
        return 0;
    }
    if (m >= 0) {
        return binomial(m, k);
    }
    // binom(m, k) = (-1)^k binom(k - m - 1, k) for m < 0.
    const Int magnitude = binomial(checked_sub(checked_sub(k, m), 1), k);
    return (k % 2 == 0) ? magnitude : -magnitude;
}

/// Multiset coefficient binom(m + k - 1, k): ways to choose k items from m with repetition.
inline Int multichoose(Int m, Int k)
{
    if (m < 0) {
        fail(ErrorKind::OutOfRange, "multichoose requires m >= 0");
    }
    if (k < 0) {
        return 0;
    }
    if (m == 0) {
        return k == 0 ? 1 : 0;
    }
    return binomial(m + k - 1, k);
}

/// Reduced fraction with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n) {} // NOLINT(google-explicit-constructor)
    Rational(Int n, Int d) : num(n), den(d)
    {
        if (den == 0) {
            fail(ErrorKind::ZeroInput, "zero denominator");
        }
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        const Int g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    [[nodiscard]] bool is_zero() const noexcept { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den)};
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
    }
    friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& q)
{
    return q.den == 1 ? std::to_string(q.num) : std::to_string(q.num) + "/" + std::to_string(q.den);
}

} // namespace arith

using arith::Rational;

} // namespace gwpow
