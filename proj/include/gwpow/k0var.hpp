#pragma once

/**
 * @file k0var.hpp
 * @brief Etale-linear classes in K_0(Var_k), their symmetric powers, and chi.
 *
 * A K0Class is an integer combination of monomials [A^l][Spec k_G], where k_G
 * is the multiquadratic algebra of a subgroup G of square classes. Products
 * follow the tensor decomposition
 *
 *     [Spec k_G1] [Spec k_G2] = |G1 n G2| [Spec k_{G1 G2}].
 *
 * Symmetric powers of monomials come from Goettsche's identity
 * [(X x A^l)^(n)] = [X^(n) x A^(nl)] together with an explicit Galois-orbit
 * decomposition of Sym^n(Spec k_G); sums are handled by the power-structure
 * convolution. All identities are those of K_0^uh, which equals K_0 in
 * characteristic zero.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwpow/arith.hpp"
#include "gwpow/gw.hpp"
#include "gwpow/subgroup.hpp"
#include "gwpow/truncated_series.hpp"

namespace gwpow {

/// [A^affine] [Spec k_algebra]
struct K0Monomial {
    Int affine = 0;
    SqClassSubgroup algebra;

    friend bool operator==(const K0Monomial& a, const K0Monomial& b)
    {
        return a.affine == b.affine && a.algebra == b.algebra;
    }
    friend bool operator<(const K0Monomial& a, const K0Monomial& b)
    {
        if (a.affine != b.affine) {
            return a.affine < b.affine;
        }
        return a.algebra < b.algebra;
    }
};

class K0Class {
public:
    using Terms = std::map<K0Monomial, Int>;

    explicit K0Class(const BaseField& field) : field_(field) {}

    static K0Class zero(const BaseField& field) { return K0Class(field); }

    static K0Class monomial(Int affine, const SqClassSubgroup& algebra, Int coeff = 1)
    {
        if (affine < 0) {
            fail(ErrorKind::OutOfRange, "affine exponent must be nonnegative");
        }
        K0Class x(algebra.field());
        x.accumulate(K0Monomial{affine, algebra}, coeff);
        return x;
    }

    [[nodiscard]] const BaseField& field() const noexcept { return field_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }

    void accumulate(const K0Monomial& m, Int coeff)
    {
        require_same_field(field_, m.algebra.field());
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, 0);
        it->second = arith::checked_add(it->second, coeff);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }

    K0Class& operator+=(const K0Class& other)
    {
        require_same_field(field_, other.field_);
        for (const auto& [m, c] : other.terms_) {
            accumulate(m, c);
        }
        return *this;
    }

    K0Class& operator-=(const K0Class& other)
    {
        require_same_field(field_, other.field_);
        for (const auto& [m, c] : other.terms_) {
            accumulate(m, arith::checked_neg(c));
        }
        return *this;
    }

    friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
    friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }

    friend K0Class operator-(const K0Class& a)
    {
        K0Class r(a.field_);
        for (const auto& [m, c] : a.terms_) {
            r.terms_.emplace(m, arith::checked_neg(c));
        }
        return r;
    }

    friend K0Class operator*(const K0Class& a, const K0Class& b)
    {
        require_same_field(a.field_, b.field_);
        K0Class r(a.field_);
        for (const auto& [m1, c1] : a.terms_) {
            for (const auto& [m2, c2] : b.terms_) {
                const auto common = static_cast<Int>(intersection(m1.algebra, m2.algebra).order());
                r.accumulate(K0Monomial{arith::checked_add(m1.affine, m2.affine), product(m1.algebra, m2.algebra)},
                             arith::checked_mul(arith::checked_mul(c1, c2), common));
            }
        }
        return r;
    }

    friend K0Class operator*(Int k, const K0Class& a)
    {
        K0Class r(a.field_);
        if (k == 0) {
            return r;
        }
        for (const auto& [m, c] : a.terms_) {
            r.terms_.emplace(m, arith::checked_mul(k, c));
        }
        return r;
    }

    friend bool operator==(const K0Class&, const K0Class&) = default;

private:
    BaseField field_;
    Terms terms_;
};

inline K0Class zero_like(const K0Class& x)
{
    return K0Class::zero(x.field());
}

inline K0Class one_like(const K0Class& x)
{
    return K0Class::monomial(0, SqClassSubgroup(x.field()));
}

inline bool is_one(const K0Class& x)
{
    return x == one_like(x);
}

using K0Series = TruncatedSeries<K0Class>;

// ---------------------------------------------------------------------------
// Named classes

inline K0Class point(const BaseField& field)
{
    return K0Class::monomial(0, SqClassSubgroup(field));
}

inline K0Class affine(const BaseField& field, Int n)
{
    return K0Class::monomial(n, SqClassSubgroup(field));
}

/// [Spec k_G]
inline K0Class spec_algebra(const SqClassSubgroup& group)
{
    return K0Class::monomial(0, group);
}

/// [P^n] = sum_{i<=n} [A^i]
inline K0Class proj_space(const BaseField& field, Int n)
{
    if (n < 0) {
        fail(ErrorKind::OutOfRange, "projective space dimension must be nonnegative");
    }
    K0Class x(field);
    for (Int i = 0; i <= n; ++i) {
        x += affine(field, i);
    }
    return x;
}

inline K0Class gm(const BaseField& field)
{
    return affine(field, 1) - point(field);
}

/// One-dimensional torus x^2 - alpha y^2 = 1: [P^1] - [Spec k(sqrt alpha)].
inline K0Class torus_1d(const SquareClass& alpha)
{
    if (alpha.is_trivial()) {
        fail(ErrorKind::TrivialClass, "torus_1d needs a nonsquare");
    }
    const auto& k = alpha.field();
    return proj_space(k, 1) - spec_algebra(SqClassSubgroup(k, {alpha}));
}

/// {xy = 0}: 2[G_m] + [Spec k]
inline K0Class nodal_union(const BaseField& field)
{
    return 2 * gm(field) + point(field);
}

/// {y^2 z = x^3}: [A^1] + [Spec k]
inline K0Class cuspidal_cubic(const BaseField& field)
{
    return affine(field, 1) + point(field);
}

/// [Bl_Z X] = [X] - [Z] + [Z][P^(c-1)] for Z of codimension c.
inline K0Class blowup_class(const K0Class& x, const K0Class& z, Int codim)
{
    require_same_field(x.field(), z.field());
    if (codim < 1) {
        fail(ErrorKind::BadCodim, "blow-up centre needs codimension >= 1, got " + std::to_string(codim));
    }
    return x - z + z * proj_space(x.field(), codim - 1);
}

/// Ring homomorphism K_0(EtLin_k) -> GW(k): [A^1] -> <-1>, [Spec k_G] -> trace form.
inline GWElement chi(const K0Class& x)
{
    const auto& k = x.field();
    GWElement result(k);
    for (const auto& [m, c] : x.terms()) {
        const auto sign = square_class(k, m.affine % 2 == 0 ? 1 : -1);
        result += c * (GWElement::form(sign) * trace_form(m.algebra));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Symmetric powers

struct OrbitLimits {
    std::size_t max_rank = 3;
    std::size_t max_degree = 8;
};

struct MultisetOrbit {
    std::vector<Int> representative; ///< multiplicity of each geometric point
    std::size_t size = 0;            ///< orbit length |D| / |H|
    SqClassSubgroup residue_algebra; ///< H^perp: residue field is k_{H^perp}
};

struct OrbitDecomposition {
    std::size_t multiset_count = 0;
    std::vector<MultisetOrbit> orbits;
    K0Class cls;
};

namespace detail {

// All count vectors of length `slots` summing to n.
inline void enumerate_multisets(std::size_t slots, Int n, std::vector<Int>& current, std::size_t index,
                                std::vector<std::vector<Int>>& out)
{
    if (index + 1 == slots) {
        current[index] = n;
        out.push_back(current);
        return;
    }
    for (Int c = n; c >= 0; --c) {
        current[index] = c;
        enumerate_multisets(slots, n - c, current, index + 1, out);
    }
}

inline std::vector<std::vector<Int>> multisets(std::size_t slots, Int n)
{
    std::vector<std::vector<Int>> out;
    std::vector<Int> current(slots, 0);
    enumerate_multisets(slots, n, current, 0, out);
    return out;
}

} // namespace detail

/// Galois-orbit decomposition of Sym^n(Spec k_G).
///
/// The geometric points of Spec k_G are the characters D = Hom(G, +-1),
/// written as bitmasks over the canonical generators of G, and Galois acts on
/// them by translation. Each orbit of size-n multisets, with stabilizer
/// H <= D, is one closed point with residue field k_{H^perp}, where
/// H^perp = {g in G : chi(g) = 1 for all chi in H}.
inline OrbitDecomposition sym_orbit_decomposition(const SqClassSubgroup& group, Int n, const OrbitLimits& limits = {})
{
    if (n < 0) {
        fail(ErrorKind::OutOfRange, "symmetric power degree must be nonnegative");
    }
    const auto r = group.rank();
    if (r > limits.max_rank || (r > 0 && static_cast<std::size_t>(n) > limits.max_degree)) {
        fail(ErrorKind::SizeLimit, "orbit enumeration for rank " + std::to_string(r) + ", n = " + std::to_string(n) +
                                       " exceeds limits (rank <= " + std::to_string(limits.max_rank) +
                                       ", n <= " + std::to_string(limits.max_degree) + ")");
    }
    const std::size_t points = std::size_t{1} << r;
    OrbitDecomposition result{0, {}, K0Class(group.field())};
    const auto all = detail::multisets(points, n);
    result.multiset_count = all.size();
    std::vector<Int> shifted(points);
    for (const auto& m : all) {
        bool canonical = true;
        std::vector<std::uint64_t> stabilizer;
        for (std::uint64_t sigma = 0; sigma < points; ++sigma) {
            for (std::uint64_t x = 0; x < points; ++x) {
                shifted[x ^ sigma] = m[x];
            }
            if (shifted == m) {
                stabilizer.push_back(sigma);
            } else if (shifted < m) {
                canonical = false;
                break;
            }
        }
        if (!canonical) {
            continue;
        }
        std::vector<SquareClass> perp;
        for (std::uint64_t g = 0; g < points; ++g) {
            const bool fixed = std::all_of(stabilizer.begin(), stabilizer.end(),
                                           [g](std::uint64_t h) { return std::popcount(h & g) % 2 == 0; });
            if (fixed) {
                perp.push_back(group.element_at(g));
            }
        }
        auto algebra = SqClassSubgroup::span(group.field(), perp);
        result.cls += spec_algebra(algebra);
        result.orbits.push_back(MultisetOrbit{m, points / stabilizer.size(), std::move(algebra)});
    }
    return result;
}

/// [Sym^n(Spec k_G)]
inline K0Class sym_orbits(const SqClassSubgroup& group, Int n, const OrbitLimits& limits = {})
{
    return sym_orbit_decomposition(group, n, limits).cls;
}

/// sum_{n <= order} [(A^l x Spec k_G)^(n)] t^n = sum_n [A^(nl)] [Sym^n Spec k_G] t^n
inline K0Series monomial_zeta(const K0Monomial& m, std::size_t order, const OrbitLimits& limits = {})
{
    std::vector<K0Class> coeffs;
    coeffs.reserve(order + 1);
    const auto& k = m.algebra.field();
    for (std::size_t n = 0; n <= order; ++n) {
        const auto nl = arith::checked_mul(static_cast<Int>(n), m.affine);
        coeffs.push_back(affine(k, nl) * sym_orbits(m.algebra, static_cast<Int>(n), limits));
    }
    return K0Series(std::move(coeffs));
}

/// Kapranov zeta function sum_{n <= order} S_n(x) t^n, with S_n extended from
/// monomials by the power-structure convolution.
inline K0Series kapranov_zeta(const K0Class& x, std::size_t order, const OrbitLimits& limits = {})
{
    K0Series result(order, point(x.field()));
    for (const auto& [m, c] : x.terms()) {
        result = result * monomial_zeta(m, order, limits).pow(c);
    }
    return result;
}

inline K0Class sym_power(const K0Class& x, Int n, const OrbitLimits& limits = {})
{
    if (n < 0) {
        fail(ErrorKind::OutOfRange, "symmetric power degree must be nonnegative");
    }
    return kapranov_zeta(x, static_cast<std::size_t>(n), limits)[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Text form: "A^2*Et(3,5) + 2*A^1 - Et(7)"

inline std::string to_string(const K0Monomial& m)
{
    std::string out;
    if (m.affine > 0) {
        out += "A^" + std::to_string(m.affine);
    }
    if (!m.algebra.is_trivial()) {
        if (!out.empty()) {
            out += "*";
        }
        out += "Et(";
        bool first = true;
        for (const auto& g : m.algebra.generators()) {
            out += (first ? "" : ",") + std::to_string(g.rep());
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

inline std::string to_string(const K0Class& x)
{
    if (x.terms().empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const Int mag = c < 0 ? -c : c;
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const auto body = to_string(m);
        if (body == "1") {
            out += std::to_string(mag);
        } else {
            out += (mag != 1 ? std::to_string(mag) + "*" : "") + body;
        }
        first = false;
    }
    return out;
}

/// Parses sums of products of factors `A`, `A^n`, `P^n` (projective space),
/// `Et(g1,...,gr)` and integers, e.g. "A^2*Et(3,5) + 2*A^1 - Et(7)".
inline K0Class parse_k0(const BaseField& field, std::string_view text)
{
    detail::Scanner s(text);
    if (s.done()) {
        s.error("empty expression");
    }
    auto factor = [&]() -> K0Class {
        if (s.peek_digit()) {
            return s.unsigned_integer() * point(field);
        }
        if (s.accept("Et(")) {
            std::vector<Int> gens;
            if (!s.accept(")")) {
                do {
                    gens.push_back(s.signed_integer());
                } while (s.accept(","));
                s.expect(")");
            }
            return spec_algebra(SqClassSubgroup::from_integers(field, gens));
        }
        if (s.accept("A")) {
            return affine(field, s.accept("^") ? s.unsigned_integer() : 1);
        }
        if (s.accept("P^")) {
            return proj_space(field, s.unsigned_integer());
        }
        s.error("expected a factor");
    };
    K0Class result(field);
    bool first = true;
    while (!s.done()) {
        Int sign = 1;
        if (s.accept("-")) {
            sign = -1;
        } else if (!s.accept("+") && !first) {
            s.error("expected '+' or '-'");
        }
        auto term = factor();
        while (s.accept("*")) {
            term = term * factor();
        }
        result += sign * term;
        first = false;
    }
    return result;
}

} // namespace gwpow
