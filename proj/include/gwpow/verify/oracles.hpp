#pragma once

// Brute-force reference computations used by the tests and by `selftest`.
// None of them call into the code paths they are meant to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gwpow/k0var.hpp"

namespace gwpow::verify {

// ---------------------------------------------------------------------------
// Hilbert symbol by local solvability

namespace detail {

inline Int strip_squares(Int a)
{
    Int sign = a < 0 ? -1 : 1;
    Int n = a < 0 ? -a : a;
    for (Int d = 2; d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
        }
    }
    return sign * n;
}

inline Int mod(Int a, Int m)
{
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace detail

/// (a, b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
/// modulo p^3 (odd p) or 2^5, after reducing a and b to squarefree
/// representatives. p = 0 denotes the real place.
inline int hilbert_by_search(Int a, Int b, Int p)
{
    if (a == 0 || b == 0) {
        throw std::invalid_argument("hilbert_by_search: zero argument");
    }
    if (p == 0) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    a = detail::strip_squares(a);
    b = detail::strip_squares(b);

    static std::map<std::tuple<Int, Int, Int>, int> cache;
    const auto key = std::make_tuple(a, b, p);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }

    const Int m = p == 2 ? 32 : p * p * p;
    std::vector<char> any_square(static_cast<std::size_t>(m), 0);
    std::vector<char> unit_square(static_cast<std::size_t>(m), 0);
    std::vector<std::pair<Int, bool>> values; // (x^2 mod m, x is a unit)
    std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
    for (Int x = 0; x < m; ++x) {
        const Int s = x * x % m;
        const bool unit = x % p != 0;
        any_square[static_cast<std::size_t>(s)] = 1;
        if (unit) {
            unit_square[static_cast<std::size_t>(s)] = 1;
        }
        const auto slot = static_cast<std::size_t>(2 * s + (unit ? 1 : 0));
        if (!seen[slot]) {
            seen[slot] = 1;
            values.emplace_back(s, unit);
        }
    }
    int result = -1;
    for (const auto& [s, xu] : values) {
        for (const auto& [t, yu] : values) {
            const Int v = detail::mod(detail::mod(a, m) * s + detail::mod(b, m) * t, m);
            const bool ok = (xu || yu) ? any_square[static_cast<std::size_t>(v)] : unit_square[static_cast<std::size_t>(v)];
            if (ok) {
                result = 1;
                break;
            }
        }
        if (result == 1) {
            break;
        }
    }
    cache.emplace(key, result);
    return result;
}

// ---------------------------------------------------------------------------
// Finite Galois sets
//
// All algebras involved are split by k_U for one ambient subgroup U, so the
// Galois action factors through D = Hom(U, +-1). A geometric point of
// Spec k_G is a character of G; sigma in D acts by multiplication with its
// restriction to G. Every computation below enumerates explicit points.

class GaloisSet {
public:
    struct Point {
        std::size_t block;
        std::uint64_t character; ///< bit i: value on the i-th generator of the block's group is -1
    };

    struct Block {
        SqClassSubgroup group;
        Int affine;
    };

    /// The points of an effective class, one block per copy of each monomial.
    GaloisSet(const K0Class& x, const SqClassSubgroup& ambient) : ambient_(ambient)
    {
        for (const auto& [m, c] : x.terms()) {
            if (c < 0) {
                throw std::invalid_argument("GaloisSet needs an effective class");
            }
            for (Int copy = 0; copy < c; ++copy) {
                add_block(m.algebra, m.affine);
            }
        }
    }

    [[nodiscard]] const SqClassSubgroup& ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<Point>& points() const { return points_; }
    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] std::uint64_t group_order() const { return std::uint64_t{1} << ambient_.generators().size(); }

    /// sigma(u) in {0, 1} for u in U
    [[nodiscard]] int evaluate(std::uint64_t sigma, const SquareClass& u) const
    {
        return std::popcount(sigma & coordinates(u)) % 2;
    }

    /// index of sigma . point
    [[nodiscard]] std::size_t act(std::uint64_t sigma, std::size_t index) const
    {
        const auto& pt = points_[index];
        const auto& gens = blocks_[pt.block].group.generators();
        std::uint64_t ch = pt.character;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (evaluate(sigma, gens[i]) == 1) {
                ch ^= std::uint64_t{1} << i;
            }
        }
        return offsets_[pt.block] + ch;
    }

    /// The subgroup H^perp of U fixed by a set of Galois elements H.
    [[nodiscard]] SqClassSubgroup fixed_algebra(const std::vector<std::uint64_t>& stabilizer) const
    {
        std::vector<SquareClass> perp;
        for (const auto& u : ambient_.elements()) {
            const bool fixed = std::all_of(stabilizer.begin(), stabilizer.end(),
                                           [&](std::uint64_t h) { return evaluate(h, u) == 0; });
            if (fixed) {
                perp.push_back(u);
            }
        }
        return SqClassSubgroup::span(ambient_.field(), perp);
    }

private:
    void add_block(const SqClassSubgroup& group, Int affine)
    {
        for (const auto& g : group.generators()) {
            if (!ambient_.contains(g)) {
                throw std::invalid_argument("GaloisSet: algebra not split by the ambient group");
            }
        }
        offsets_.push_back(points_.size());
        for (std::uint64_t ch = 0; ch < group.order(); ++ch) {
            points_.push_back(Point{blocks_.size(), ch});
        }
        blocks_.push_back(Block{group, affine});
    }

    [[nodiscard]] std::uint64_t coordinates(const SquareClass& u) const
    {
        const auto& gens = ambient_.generators();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
            auto v = SquareClass::one(ambient_.field());
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if ((mask >> i) & 1U) {
                    v = v * gens[i];
                }
            }
            if (v == u) {
                return mask;
            }
        }
        throw std::invalid_argument("GaloisSet: class outside the ambient group");
    }

    SqClassSubgroup ambient_;
    std::vector<Point> points_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> offsets_;
};

/// Smallest subgroup splitting every algebra occurring in the given classes.
inline SqClassSubgroup splitting_group(const std::vector<const K0Class*>& classes)
{
    std::vector<SquareClass> gens;
    const BaseField* field = nullptr;
    for (const auto* x : classes) {
        field = &x->field();
        for (const auto& [m, c] : x->terms()) {
            for (const auto& g : m.algebra.generators()) {
                gens.push_back(g);
            }
        }
    }
    if (field == nullptr) {
        throw std::invalid_argument("splitting_group: no classes");
    }
    return SqClassSubgroup::span(*field, gens);
}

namespace detail {

inline void for_each_multiset(std::size_t slots, Int n, std::vector<Int>& counts, std::size_t index,
                              const auto& visit)
{
    if (index == slots) {
        if (n == 0) {
            visit(counts);
        }
        return;
    }
    for (Int c = 0; c <= n; ++c) {
        counts[index] = c;
        for_each_multiset(slots, n - c, counts, index + 1, visit);
    }
    counts[index] = 0;
}

} // namespace detail

/// [X^(n)] for effective X by enumerating Galois orbits of degree-n
/// multisets of geometric points; a point with multiplicities m_p
/// contributes [A^(sum m_p l_p)] [Spec(residue algebra)].
inline K0Class sym_power_by_points(const K0Class& x, Int n)
{
    const auto ambient = splitting_group({&x});
    const GaloisSet set(x, ambient);
    const auto& pts = set.points();
    K0Class result(x.field());
    if (pts.empty()) {
        return n == 0 ? point(x.field()) : result;
    }
    std::vector<Int> counts(pts.size(), 0);
    std::vector<Int> image(pts.size(), 0);
    detail::for_each_multiset(pts.size(), n, counts, 0, [&](const std::vector<Int>& m) {
        std::vector<std::uint64_t> stabilizer;
        for (std::uint64_t sigma = 0; sigma < set.group_order(); ++sigma) {
            std::fill(image.begin(), image.end(), 0);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                image[set.act(sigma, i)] += m[i];
            }
            if (image < m) {
                return; // not the orbit's least representative
            }
            if (image == m) {
                stabilizer.push_back(sigma);
            }
        }
        Int affine_dim = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            affine_dim += m[i] * set.blocks()[pts[i].block].affine;
        }
        result += K0Class::monomial(affine_dim, set.fixed_algebra(stabilizer));
    });
    return result;
}

/// [X][Y] for effective X, Y from the Galois orbits on pairs of points.
inline K0Class product_by_points(const K0Class& x, const K0Class& y)
{
    const auto ambient = splitting_group({&x, &y});
    const GaloisSet sx(x, ambient);
    const GaloisSet sy(y, ambient);
    K0Class result(x.field());
    const auto nx = sx.points().size();
    const auto ny = sy.points().size();
    std::vector<char> done(nx * ny, 0);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (done[i * ny + j]) {
                continue;
            }
            std::vector<std::uint64_t> stabilizer;
            for (std::uint64_t sigma = 0; sigma < sx.group_order(); ++sigma) {
                const auto a = sx.act(sigma, i);
                const auto b = sy.act(sigma, j);
                done[a * ny + b] = 1;
                if (a == i && b == j) {
                    stabilizer.push_back(sigma);
                }
            }
            const Int affine_dim =
                sx.blocks()[sx.points()[i].block].affine + sy.blocks()[sy.points()[j].block].affine;
            result += K0Class::monomial(affine_dim, sx.fixed_algebra(stabilizer));
        }
    }
    return result;
}

/// Trace form of k_G from its Gram matrix in the basis prod_{i in S} sqrt(g_i):
/// Tr(sqrt(u) sqrt(v)) vanishes unless u v is a square.
inline GWElement trace_form_by_gram(const SqClassSubgroup& group)
{
    const auto& field = group.field();
    const auto& gens = group.generators();
    const std::uint64_t n = std::uint64_t{1} << gens.size();
    GWElement form(field);
    // Basis vector e_S = prod_{i in S} sqrt(g_i); e_S^2 = prod_{i in S} g_i, so
    // the Gram matrix is diagonal with entries n * prod_{i in S} g_i.
    for (std::uint64_t s = 0; s < n; ++s) {
        Rational entry{static_cast<Int>(n), 1};
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if ((s >> i) & 1U) {
                entry = entry * Rational{gens[i].rep(), 1};
            }
        }
        form.accumulate(square_class(field, entry), 1);
    }
    return form;
}

} // namespace gwpow::verify
