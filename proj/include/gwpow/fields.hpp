#pragma once

/**
 * @file fields.hpp
 * @brief Base fields, canonical square classes and local symbols.
 *
 * Four base fields are supported: Q, R, C and F_p for odd primes p. Each
 * nonzero element is mapped to a canonical representative of its coset in
 * k^x / (k^x)^2, which is what makes equality in GW(k) decidable:
 *
 *   - Q:   a signed squarefree integer (the class of a/b is the class of ab),
 *   - R:   +1 or -1,
 *   - C:   1,
 *   - F_p: 1, or the least quadratic nonresidue mod p.
 */

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>

#include "gwpow/arith.hpp"
#include "gwpow/error.hpp"

namespace gwpow {

class BaseField {
public:
    enum class Kind { Rationals, Reals, Complexes, PrimeField };

    static BaseField rationals() { return BaseField(Kind::Rationals, 0); }
    static BaseField reals() { return BaseField(Kind::Reals, 0); }
    static BaseField complexes() { return BaseField(Kind::Complexes, 0); }

    /// F_p for an odd prime p; characteristic 2 is rejected.
    static BaseField prime_field(Int p)
    {
        if (p == 2) {
            fail(ErrorKind::CharTwo, "characteristic 2 is not supported");
        }
        if (p < 3 || !arith::is_prime(static_cast<std::uint64_t>(p))) {
            fail(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
        }
        return BaseField(Kind::PrimeField, p);
    }

    /// Accepts "Q", "R", "C" and "Fp:<p>" (also "F<p>").
    static BaseField parse(std::string_view text)
    {
        if (text == "Q") {
            return rationals();
        }
        if (text == "R") {
            return reals();
        }
        if (text == "C") {
            return complexes();
        }
        std::string_view digits;
        if (text.substr(0, 3) == "Fp:") {
            digits = text.substr(3);
        } else if (text.size() > 1 && text[0] == 'F') {
            digits = text.substr(1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
            digits.size() > 18) {
            fail(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'");
        }
        return prime_field(std::stoll(std::string(digits)));
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] Int characteristic() const noexcept { return prime_; }
    [[nodiscard]] bool has_real_place() const noexcept
    {
        return kind_ == Kind::Rationals || kind_ == Kind::Reals;
    }

    [[nodiscard]] std::string name() const
    {
        switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Reals: return "R";
        case Kind::Complexes: return "C";
        case Kind::PrimeField: return "Fp:" + std::to_string(prime_);
        }
        return "?";
    }

    /// Least quadratic nonresidue mod p (F_p only).
    [[nodiscard]] Int least_nonresidue() const;

    friend bool operator==(const BaseField&, const BaseField&) = default;
    friend auto operator<=>(const BaseField&, const BaseField&) = default;

private:
    BaseField(Kind kind, Int prime) : kind_(kind), prime_(prime) {}

    Kind kind_;
    Int prime_;
};

inline void require_same_field(const BaseField& a, const BaseField& b)
{
    if (a != b) {
        fail(ErrorKind::FieldMismatch, "operands live over " + a.name() + " and " + b.name());
    }
}

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(Int a, Int p)
{
    if (p < 3 || p % 2 == 0 || !arith::is_prime(static_cast<std::uint64_t>(p))) {
        fail(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
    }
    std::uint64_t x = static_cast<std::uint64_t>(((a % p) + p) % p);
    std::uint64_t n = static_cast<std::uint64_t>(p);
    if (x == 0) {
        return 0;
    }
    // Jacobi reciprocity; n stays odd throughout.
    int t = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const auto r = n % 8;
            if (r == 3 || r == 5) {
                t = -t;
            }
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) {
            t = -t;
        }
        x %= n;
    }
    return n == 1 ? t : 0;
}

inline Int BaseField::least_nonresidue() const
{
    if (kind_ != Kind::PrimeField) {
        fail(ErrorKind::FieldMismatch, "least nonresidue requested over " + name());
    }
    for (Int g = 2; g < prime_; ++g) {
        if (legendre(g, prime_) == -1) {
            return g;
        }
    }
    fail(ErrorKind::BadPrime, "no nonresidue found");
}

/// Canonical representative of a coset of squares; see the file comment.
class SquareClass {
public:
    /// The trivial class (squares) over `field`.
    static SquareClass one(const BaseField& field) { return SquareClass(field, 1); }

    [[nodiscard]] const BaseField& field() const noexcept { return field_; }
    /// Integer representative: the canonical element described in the file comment.
    [[nodiscard]] Int rep() const noexcept { return rep_; }
    [[nodiscard]] bool is_trivial() const noexcept { return rep_ == 1; }
    [[nodiscard]] bool is_negative() const noexcept { return rep_ < 0; }

    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);

    friend bool operator==(const SquareClass& a, const SquareClass& b) = default;

    /// Orders by field, then by |rep|, with +m before -m.
    friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b)
    {
        if (auto c = a.field_ <=> b.field_; c != 0) {
            return c;
        }
        const auto abs_a = a.rep_ < 0 ? -a.rep_ : a.rep_;
        const auto abs_b = b.rep_ < 0 ? -b.rep_ : b.rep_;
        if (auto c = abs_a <=> abs_b; c != 0) {
            return c;
        }
        return (a.rep_ < 0) <=> (b.rep_ < 0);
    }

private:
    friend SquareClass square_class(const BaseField& field, const Rational& value, std::uint64_t bound);

    SquareClass(BaseField field, Int rep) : field_(field), rep_(rep) {}

    BaseField field_;
    Int rep_;
};

/// Canonical square class of a nonzero rational (or residue, over F_p).
/// Over Q the squarefree part is found by trial division up to `bound`.
inline SquareClass square_class(const BaseField& field, const Rational& value,
                                std::uint64_t bound = arith::default_factor_bound)
{
    if (value.is_zero()) {
        fail(ErrorKind::ZeroInput, "square class of zero");
    }
    switch (field.kind()) {
    case BaseField::Kind::Rationals: {
        const auto num = static_cast<std::uint64_t>(std::llabs(value.num));
        const auto den = static_cast<std::uint64_t>(value.den);
        const auto c1 = arith::squarefree_core(num, bound);
        const auto c2 = arith::squarefree_core(den, bound);
        const auto g = std::gcd(c1, c2);
        const Int core = arith::checked_mul(static_cast<Int>(c1 / g), static_cast<Int>(c2 / g));
        return SquareClass(field, value.num < 0 ? -core : core);
    }
    case BaseField::Kind::Reals:
        return SquareClass(field, value.num < 0 ? -1 : 1);
    case BaseField::Kind::Complexes:
        return SquareClass(field, 1);
    case BaseField::Kind::PrimeField: {
        const Int p = field.characteristic();
        if (value.num % p == 0 || value.den % p == 0) {
            fail(ErrorKind::ZeroInput, arith::to_string(value) + " is not a unit mod " + std::to_string(p));
        }
        const auto residue = static_cast<Int>(arith::mulmod(static_cast<std::uint64_t>(((value.num % p) + p) % p),
                                                            static_cast<std::uint64_t>(value.den % p),
                                                            static_cast<std::uint64_t>(p)));
        return SquareClass(field, legendre(residue, p) == 1 ? 1 : field.least_nonresidue());
    }
    }
    fail(ErrorKind::FieldMismatch, "unknown field");
}

inline SquareClass square_class(const BaseField& field, Int value)
{
    return square_class(field, Rational(value));
}

inline SquareClass operator*(const SquareClass& a, const SquareClass& b)
{
    require_same_field(a.field_, b.field_);
    switch (a.field_.kind()) {
    case BaseField::Kind::Rationals: {
        const Int ma = a.rep_ < 0 ? -a.rep_ : a.rep_;
        const Int mb = b.rep_ < 0 ? -b.rep_ : b.rep_;
        const Int g = std::gcd(ma, mb);
        const Int core = arith::checked_mul(ma / g, mb / g);
        return SquareClass(a.field_, ((a.rep_ < 0) != (b.rep_ < 0)) ? -core : core);
    }
    case BaseField::Kind::Reals:
        return SquareClass(a.field_, a.rep_ * b.rep_);
    case BaseField::Kind::Complexes:
        return a;
    case BaseField::Kind::PrimeField:
        return SquareClass(a.field_, (a.is_trivial() == b.is_trivial()) ? 1 : a.field_.least_nonresidue());
    }
    return a;
}

/// A place of Q: the real place or a prime p (including 2).
class Place {
public:
    static Place real() { return Place(0); }
    static Place prime(Int p)
    {
        if (p < 2 || !arith::is_prime(static_cast<std::uint64_t>(p))) {
            fail(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
        }
        return Place(p);
    }

    [[nodiscard]] bool is_real() const noexcept { return p_ == 0; }
    [[nodiscard]] Int p() const noexcept { return p_; }
    [[nodiscard]] std::string name() const { return is_real() ? "inf" : std::to_string(p_); }

    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;

private:
    explicit Place(Int p) : p_(p) {}
    Int p_;
};

namespace detail {

inline int epsilon2(Int u) // (u-1)/2 mod 2 for odd u
{
    return ((u % 4) + 4) % 4 == 3 ? 1 : 0;
}

inline int omega2(Int u) // (u^2-1)/8 mod 2 for odd u
{
    const Int r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace detail

/// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
/// solution over the completion at v. Defined over Q at every place, and over
/// R at the real place.
inline int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v)
{
    require_same_field(a.field(), b.field());
    const auto kind = a.field().kind();
    if (v.is_real()) {
        if (kind != BaseField::Kind::Rationals && kind != BaseField::Kind::Reals) {
            fail(ErrorKind::NoRealPlace, a.field().name() + " has no real place");
        }
        return (a.is_negative() && b.is_negative()) ? -1 : 1;
    }
    if (kind != BaseField::Kind::Rationals) {
        fail(ErrorKind::FieldMismatch, "finite places are only available over Q");
    }
    const Int p = v.p();
    // Reps are squarefree, so each valuation is 0 or 1.
    Int u = a.rep();
    Int w = b.rep();
    const int alpha = (u % p == 0) ? 1 : 0;
    const int beta = (w % p == 0) ? 1 : 0;
    if (alpha) {
        u /= p;
    }
    if (beta) {
        w /= p;
    }
    if (p == 2) {
        const int e = detail::epsilon2(u) * detail::epsilon2(w) + alpha * detail::omega2(w) + beta * detail::omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int result = 1;
    if (alpha && beta && ((p - 1) / 2) % 2 == 1) {
        result = -result;
    }
    if (beta) {
        result *= legendre(u, p);
    }
    if (alpha) {
        result *= legendre(w, p);
    }
    return result;
}

inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v)
{
    const auto q = BaseField::rationals();
    return hilbert_symbol(square_class(q, a), square_class(q, b), v);
}

} // namespace gwpow

template <>
struct std::hash<gwpow::SquareClass> {
    std::size_t operator()(const gwpow::SquareClass& c) const noexcept
    {
        return std::hash<gwpow::Int>{}(c.rep()) ^ (std::hash<gwpow::Int>{}(c.field().characteristic()) << 1U);
    }
};
