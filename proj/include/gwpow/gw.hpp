#pragma once

/**
 * @file gw.hpp
 * @brief Virtual quadratic forms: the Grothendieck-Witt ring GW(k).
 *
 * A GWElement is a finite integer combination of rank-one forms <a>, stored
 * without normalization. Two elements are compared with eq(), which decides
 * equality in GW(k) from classical invariants: for d = x - y split into
 * genuine forms P - N, x = y iff P and N are isometric, and isometry is
 * decided by
 *
 *   - C:   rank,
 *   - R:   rank and signature,
 *   - F_p: rank and discriminant,
 *   - Q:   rank, discriminant, signature and Hasse invariants at
 *          {inf, 2} and every prime dividing an entry (Hasse-Minkowski
 *          plus Witt cancellation).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwpow/arith.hpp"
#include "gwpow/fields.hpp"
#include "gwpow/subgroup.hpp"

namespace gwpow {

class GWElement {
public:
    using Terms = std::map<SquareClass, Int>;

    explicit GWElement(const BaseField& field) : field_(field) {}

    static GWElement zero(const BaseField& field) { return GWElement(field); }
    static GWElement one(const BaseField& field) { return form(SquareClass::one(field)); }

    /// mult * <c>
    static GWElement form(const SquareClass& c, Int mult = 1)
    {
        GWElement x(c.field());
        x.accumulate(c, mult);
        return x;
    }

    static GWElement form(const BaseField& field, Int a, Int mult = 1)
    {
        return form(square_class(field, a), mult);
    }

    /// The hyperbolic form <1> + <-1>.
    static GWElement hyperbolic(const BaseField& field, Int mult = 1)
    {
        return form(field, 1, mult) + form(field, -1, mult);
    }

    [[nodiscard]] const BaseField& field() const noexcept { return field_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero_literal() const noexcept { return terms_.empty(); }

    /// Coefficient of <c>; zero when absent.
    [[nodiscard]] Int multiplicity(const SquareClass& c) const
    {
        const auto it = terms_.find(c);
        return it == terms_.end() ? 0 : it->second;
    }

    [[nodiscard]] Int rank() const
    {
        Int r = 0;
        for (const auto& [c, m] : terms_) {
            r = arith::checked_add(r, m);
        }
        return r;
    }

    [[nodiscard]] bool is_genuine() const
    {
        for (const auto& [c, m] : terms_) {
            if (m < 0) {
                return false;
            }
        }
        return true;
    }

    void accumulate(const SquareClass& c, Int mult)
    {
        require_same_field(field_, c.field());
        if (mult == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(c, 0);
        it->second = arith::checked_add(it->second, mult);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }

    GWElement& operator+=(const GWElement& other)
    {
        require_same_field(field_, other.field_);
        for (const auto& [c, m] : other.terms_) {
            accumulate(c, m);
        }
        return *this;
    }

    GWElement& operator-=(const GWElement& other)
    {
        require_same_field(field_, other.field_);
        for (const auto& [c, m] : other.terms_) {
            accumulate(c, arith::checked_neg(m));
        }
        return *this;
    }

    friend GWElement operator+(GWElement a, const GWElement& b) { return a += b; }
    friend GWElement operator-(GWElement a, const GWElement& b) { return a -= b; }

    friend GWElement operator-(const GWElement& a)
    {
        GWElement r(a.field_);
        for (const auto& [c, m] : a.terms_) {
            r.terms_.emplace(c, arith::checked_neg(m));
        }
        return r;
    }

    friend GWElement operator*(const GWElement& a, const GWElement& b)
    {
        require_same_field(a.field_, b.field_);
        GWElement r(a.field_);
        for (const auto& [c1, m1] : a.terms_) {
            for (const auto& [c2, m2] : b.terms_) {
                r.accumulate(c1 * c2, arith::checked_mul(m1, m2));
            }
        }
        return r;
    }

    friend GWElement operator*(Int k, const GWElement& a)
    {
        GWElement r(a.field_);
        if (k == 0) {
            return r;
        }
        for (const auto& [c, m] : a.terms_) {
            r.terms_.emplace(c, arith::checked_mul(k, m));
        }
        return r;
    }

    GWElement& operator*=(const GWElement& other) { return *this = *this * other; }

    /// Literal equality of representatives (not equality in GW(k); see eq()).
    friend bool operator==(const GWElement&, const GWElement&) = default;

private:
    BaseField field_;
    Terms terms_;
};

/// sum_i <a_i>
inline GWElement diag(const BaseField& field, const std::vector<Rational>& entries)
{
    GWElement x(field);
    for (const auto& a : entries) {
        x.accumulate(square_class(field, a), 1);
    }
    return x;
}

struct GWInvariants {
    Int rank;
    SquareClass disc;
    std::optional<Int> signature;
    /// Present only for genuine forms over Q.
    std::optional<std::map<Place, int>> hasse;
};

inline Int rank_hom(const GWElement& x)
{
    return x.rank();
}

inline Int sign_hom(const GWElement& x)
{
    if (!x.field().has_real_place()) {
        fail(ErrorKind::NoRealPlace, x.field().name() + " has no real embedding");
    }
    Int s = 0;
    for (const auto& [c, m] : x.terms()) {
        s = c.is_negative() ? arith::checked_sub(s, m) : arith::checked_add(s, m);
    }
    return s;
}

/// Unsigned determinant class prod <a>^mult (classes are 2-torsion, so odd
/// multiplicities contribute and even ones cancel).
inline SquareClass disc_hom(const GWElement& x)
{
    auto d = SquareClass::one(x.field());
    for (const auto& [c, m] : x.terms()) {
        if (m % 2 != 0) {
            d = d * c;
        }
    }
    return d;
}

namespace detail {

inline void collect_primes(Int rep, std::set<Int>& primes)
{
    const auto n = static_cast<std::uint64_t>(rep < 0 ? -rep : rep);
    if (n <= 1) {
        return;
    }
    for (const auto& pp : arith::factorize(n)) {
        primes.insert(static_cast<Int>(pp.prime));
    }
}

/// {inf, 2} and every prime dividing an entry of the given forms.
inline std::vector<Place> relevant_places(const std::vector<const GWElement*>& forms)
{
    std::set<Int> primes{2};
    for (const auto* f : forms) {
        for (const auto& [c, m] : f->terms()) {
            collect_primes(c.rep(), primes);
        }
    }
    std::vector<Place> places{Place::real()};
    for (Int p : primes) {
        places.push_back(Place::prime(p));
    }
    return places;
}

} // namespace detail

/// Hasse invariant prod_{i<j} (a_i, a_j)_v of the expanded diagonal entries
/// of a genuine form. Grouping equal entries, this is
/// prod_{c<c'} (c,c')^(m m') * prod_c (c,c)^(m(m-1)/2).
inline int hasse_invariant(const GWElement& x, const Place& v)
{
    int h = 1;
    const auto& t = x.terms();
    for (auto it = t.begin(); it != t.end(); ++it) {
        const auto& [c, m] = *it;
        if (((m * (m - 1)) / 2) % 2 != 0 && hilbert_symbol(c, c, v) == -1) {
            h = -h;
        }
        for (auto jt = std::next(it); jt != t.end(); ++jt) {
            const auto& [c2, m2] = *jt;
            if ((m * m2) % 2 != 0 && hilbert_symbol(c, c2, v) == -1) {
                h = -h;
            }
        }
    }
    return h;
}

inline GWInvariants invariants(const GWElement& x)
{
    GWInvariants inv{x.rank(), disc_hom(x), std::nullopt, std::nullopt};
    if (x.field().has_real_place()) {
        inv.signature = sign_hom(x);
    }
    if (x.field().kind() == BaseField::Kind::Rationals && x.is_genuine()) {
        std::map<Place, int> hasse;
        for (const auto& v : detail::relevant_places({&x})) {
            hasse.emplace(v, hasse_invariant(x, v));
        }
        inv.hasse = std::move(hasse);
    }
    return inv;
}

/// Equality in GW(k).
inline bool eq(const GWElement& x, const GWElement& y)
{
    require_same_field(x.field(), y.field());
    const auto d = x - y;
    GWElement pos(x.field());
    GWElement neg(x.field());
    for (const auto& [c, m] : d.terms()) {
        if (m > 0) {
            pos.accumulate(c, m);
        } else {
            neg.accumulate(c, -m);
        }
    }
    if (pos.rank() != neg.rank()) {
        return false;
    }
    switch (x.field().kind()) {
    case BaseField::Kind::Complexes:
        return true;
    case BaseField::Kind::Reals:
        return sign_hom(pos) == sign_hom(neg);
    case BaseField::Kind::PrimeField:
        return disc_hom(pos) == disc_hom(neg);
    case BaseField::Kind::Rationals:
        if (disc_hom(pos) != disc_hom(neg) || sign_hom(pos) != sign_hom(neg)) {
            return false;
        }
        for (const auto& v : detail::relevant_places({&pos, &neg})) {
            if (hasse_invariant(pos, v) != hasse_invariant(neg, v)) {
                return false;
            }
        }
        return true;
    }
    return false;
}

/// Trace form of the multiquadratic algebra k_G: <|G|> * sum_{g in G} <g>.
inline GWElement trace_form(const SqClassSubgroup& group)
{
    const auto& field = group.field();
    GWElement sum(field);
    for (const auto& g : group.elements()) {
        sum.accumulate(g, 1);
    }
    return GWElement::form(square_class(field, static_cast<Int>(group.order()))) * sum;
}

// Coefficient-ring hooks used by TruncatedSeries.
inline GWElement zero_like(const GWElement& x)
{
    return GWElement::zero(x.field());
}

inline GWElement one_like(const GWElement& x)
{
    return GWElement::one(x.field());
}

inline bool is_one(const GWElement& x)
{
    return eq(x, GWElement::one(x.field()));
}

// ---------------------------------------------------------------------------
// Text form: signed combinations such as "2⟨1⟩ + ⟨-6⟩ - 3⟨2/5⟩".

inline std::string to_string(const GWElement& x)
{
    if (x.terms().empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [c, m] : x.terms()) {
        const Int mag = m < 0 ? -m : m;
        if (first) {
            out += m < 0 ? "-" : "";
        } else {
            out += m < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += std::to_string(mag);
        }
        out += "⟨" + std::to_string(c.rep()) + "⟩";
        first = false;
    }
    return out;
}

namespace detail {

/// Cursor over an expression string shared by the text grammars.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    [[nodiscard]] bool done()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    bool accept(std::string_view token)
    {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!accept(token)) {
            error("expected '" + std::string(token) + "'");
        }
    }

    [[nodiscard]] bool peek_digit()
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
    }

    Int unsigned_integer()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
        }
        if (start == pos_) {
            error("expected an integer");
        }
        if (pos_ - start > 18) {
            error("integer too large");
        }
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    Int signed_integer()
    {
        const bool negative = accept("-");
        if (!negative) {
            accept("+");
        }
        const Int v = unsigned_integer();
        return negative ? -v : v;
    }

    Rational rational()
    {
        const Int num = signed_integer();
        if (accept("/")) {
            return {num, unsigned_integer()};
        }
        return {num};
    }

    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the grammar produced by to_string. Terms are `[k][*]⟨a⟩`, `[k][*]H`
/// (hyperbolic) or a bare integer k (meaning k⟨1⟩); ASCII `<a>` is accepted
/// for `⟨a⟩` and `ℍ` for `H`. Entries are nonzero integers or fractions a/b.
inline GWElement parse_gw(const BaseField& field, std::string_view text)
{
    detail::Scanner s(text);
    GWElement result(field);
    if (s.done()) {
        s.error("empty expression");
    }
    bool first = true;
    while (!s.done()) {
        Int sign = 1;
        if (s.accept("-")) {
            sign = -1;
        } else if (!s.accept("+") && !first) {
            s.error("expected '+' or '-'");
        }
        Int coeff = 1;
        bool has_coeff = false;
        if (s.peek_digit()) {
            coeff = s.unsigned_integer();
            has_coeff = true;
            s.accept("*");
        }
        if (s.accept("⟨") || s.accept("<")) {
            const auto a = s.rational();
            if (!s.accept("⟩")) {
                s.expect(">");
            }
            result.accumulate(square_class(field, a), sign * coeff);
        } else if (s.accept("ℍ") || s.accept("H")) {
            result += GWElement::hyperbolic(field, sign * coeff);
        } else if (has_coeff) {
            result.accumulate(SquareClass::one(field), sign * coeff);
        } else {
            s.error("expected a term");
        }
        first = false;
    }
    return result;
}

/// "a" or "a/b"
inline Rational parse_rational(std::string_view text)
{
    detail::Scanner s(text);
    const auto value = s.rational();
    if (!s.done()) {
        s.error("trailing input");
    }
    return value;
}

inline Int parse_integer(std::string_view text)
{
    detail::Scanner s(text);
    const auto value = s.signed_integer();
    if (!s.done()) {
        s.error("trailing input");
    }
    return value;
}

} // namespace gwpow
