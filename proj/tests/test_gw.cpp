#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gwpow/gw.hpp"
#include "gwpow/verify/generators.hpp"

using namespace gwpow;

namespace {

const BaseField Q = BaseField::rationals();

// Isometry of diagonal forms over Q by Witt's chain equivalence: two
// diagonal forms are isometric iff a chain of binary moves
// <a, b> -> <c, abc> (c represented by <a, b>) connects them. Entries range
// over the 16 classes generated by -1, 2, 3, 5.
class ChainOracle {
public:
    ChainOracle()
    {
        for (Int mask = 0; mask < 16; ++mask) {
            Int v = 1;
            const Int gens[] = {-1, 2, 3, 5};
            for (int i = 0; i < 4; ++i) {
                if ((mask >> i) & 1) {
                    v *= gens[i];
                }
            }
            classes_.push_back(v);
        }
        std::sort(classes_.begin(), classes_.end());
        for (int rank = 1; rank <= 3; ++rank) {
            build(rank);
        }
    }

    [[nodiscard]] const std::vector<Int>& classes() const { return classes_; }

    [[nodiscard]] bool isometric(std::vector<Int> x, std::vector<Int> y)
    {
        if (x.size() != y.size()) {
            return false;
        }
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return find(index_.at(x)) == find(index_.at(y));
    }

private:
    static Int core(Int v)
    {
        const Int sign = v < 0 ? -1 : 1;
        v *= sign;
        for (Int d = 2; d * d <= v; ++d) {
            while (v % (d * d) == 0) {
                v /= d * d;
            }
        }
        return sign * v;
    }

    static bool is_square(Int v)
    {
        if (v < 0) {
            return false;
        }
        Int r = 0;
        while (r * r < v) {
            ++r;
        }
        return r * r == v;
    }

    // c is represented by <a, b> over Q iff a x^2 + b y^2 = c z^2 has a solution with z != 0.
    static bool represents(Int a, Int b, Int c)
    {
        constexpr Int bound = 60;
        for (Int x = 0; x <= bound; ++x) {
            for (Int y = 0; y <= bound; ++y) {
                if (x == 0 && y == 0) {
                    continue;
                }
                const Int v = a * x * x + b * y * y;
                if (v == 0) {
                    return true; // isotropic, hence universal
                }
                if (v % c == 0 && is_square(v / c)) {
                    return true;
                }
            }
        }
        return false;
    }

    void build(int rank)
    {
        std::vector<std::vector<Int>> forms;
        std::vector<Int> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(cur.size()) == rank) {
                forms.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < classes_.size(); ++i) {
                cur.push_back(classes_[i]);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        for (const auto& f : forms) {
            index_.emplace(f, static_cast<int>(parent_.size()));
            parent_.push_back(static_cast<int>(parent_.size()));
        }
        for (const auto& f : forms) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                for (std::size_t j = i + 1; j < f.size(); ++j) {
                    for (Int c : classes_) {
                        if (!rep_cache_.contains({f[i], f[j], c})) {
                            rep_cache_[{f[i], f[j], c}] = represents(f[i], f[j], c);
                        }
                        if (!rep_cache_[{f[i], f[j], c}]) {
                            continue;
                        }
                        auto g = f;
                        g[i] = c;
                        g[j] = core(f[i] * f[j] * c);
                        std::sort(g.begin(), g.end());
                        unite(index_.at(f), index_.at(g));
                    }
                }
            }
        }
    }

    int find(int i)
    {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

    std::vector<Int> classes_;
    std::map<std::vector<Int>, int> index_;
    std::vector<int> parent_;
    std::map<std::tuple<Int, Int, Int>, bool> rep_cache_;
};

GWElement from_entries(const std::vector<Int>& entries)
{
    GWElement x(Q);
    for (Int a : entries) {
        x.accumulate(square_class(Q, a), 1);
    }
    return x;
}

} // namespace

TEST(GW, EqMatchesChainEquivalenceUpToRankThree)
{
    ChainOracle oracle;
    const auto& cls = oracle.classes();
    // All pairs of rank-2 forms, and rank-3 forms against a spread of partners.
    std::vector<std::vector<Int>> rank2;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i; j < cls.size(); ++j) {
            rank2.push_back({cls[i], cls[j]});
        }
    }
    for (const auto& x : rank2) {
        for (const auto& y : rank2) {
            ASSERT_EQ(eq(from_entries(x), from_entries(y)), oracle.isometric(x, y))
                << to_string(from_entries(x)) << " vs " << to_string(from_entries(y));
        }
    }
    verify::Generator gen(21);
    for (int i = 0; i < 4000; ++i) {
        std::vector<Int> x;
        std::vector<Int> y;
        for (int k = 0; k < 3; ++k) {
            x.push_back(cls[static_cast<std::size_t>(gen.integer(0, 15))]);
            y.push_back(cls[static_cast<std::size_t>(gen.integer(0, 15))]);
        }
        // Force the cheap invariants to agree half of the time so the Hasse test is exercised.
        if (i % 2 == 0) {
            Int d = 1;
            for (Int v : x) {
                d *= v;
            }
            for (std::size_t k = 0; k < 2; ++k) {
                d *= y[k];
            }
            Int m = d < 0 ? -d : d;
            Int core = 1;
            for (Int p : {2, 3, 5}) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                if (e % 2 == 1) {
                    core *= p;
                }
            }
            y[2] = d < 0 ? -core : core;
        }
        ASSERT_EQ(eq(from_entries(x), from_entries(y)), oracle.isometric(x, y))
            << to_string(from_entries(x)) << " vs " << to_string(from_entries(y));
    }
}

TEST(GW, PresentationExamples)
{
    EXPECT_TRUE(eq(GWElement::form(Q, 1, 2), GWElement::form(Q, 2, 2)));
    EXPECT_TRUE(eq(GWElement::form(Q, 3) + GWElement::form(Q, -3), GWElement::hyperbolic(Q)));
    EXPECT_EQ(GWElement::form(Q, 2) * GWElement::form(Q, 3), GWElement::form(Q, 6));
    EXPECT_FALSE(eq(GWElement::form(Q, 1, 2), GWElement::form(Q, 3, 2)));
    EXPECT_FALSE(eq(GWElement::one(Q), GWElement::form(Q, -1)));
}

TEST(GW, RingAxiomsOnRandomElements)
{
    verify::Generator gen(22);
    for (const auto& field : {Q, BaseField::prime_field(7), BaseField::reals(), BaseField::complexes()}) {
        for (int i = 0; i < 100; ++i) {
            const auto x = gen.element(field);
            const auto y = gen.element(field);
            const auto z = gen.element(field);
            EXPECT_EQ(x + y, y + x);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ(x - x, GWElement::zero(field));
            EXPECT_TRUE(eq(x * GWElement::one(field), x));
        }
    }
}

TEST(GW, HomomorphismsAreMultiplicative)
{
    verify::Generator gen(23);
    for (int i = 0; i < 200; ++i) {
        const auto x = gen.element(Q);
        const auto y = gen.element(Q);
        EXPECT_EQ(rank_hom(x * y), rank_hom(x) * rank_hom(y));
        EXPECT_EQ(sign_hom(x * y), sign_hom(x) * sign_hom(y));
        EXPECT_EQ(rank_hom(x + y), rank_hom(x) + rank_hom(y));
    }
}

TEST(GW, EqIsAnEquivalenceCompatibleWithTheRing)
{
    verify::Generator gen(24);
    for (int i = 0; i < 200; ++i) {
        const auto x = gen.genuine(Q);
        const auto z = gen.element(Q);
        // <a> + <b> = <a+b> + <ab(a+b)> rewrites x without changing its class.
        const Int a = gen.nonzero(20);
        const Int b = gen.nonzero(20);
        if (a + b == 0) {
            continue;
        }
        const auto lhs = x + GWElement::form(Q, a) + GWElement::form(Q, b);
        const auto rhs = x + GWElement::form(Q, a + b) + GWElement::form(Q, a * b * (a + b));
        EXPECT_TRUE(eq(lhs, rhs));
        EXPECT_TRUE(eq(lhs * z, rhs * z));
        EXPECT_TRUE(eq(rhs, lhs));
    }
}

TEST(GW, OtherFields)
{
    const auto r = BaseField::reals();
    EXPECT_TRUE(eq(GWElement::form(r, 5), GWElement::one(r)));
    EXPECT_FALSE(eq(GWElement::form(r, -5), GWElement::one(r)));
    const auto c = BaseField::complexes();
    EXPECT_TRUE(eq(GWElement::form(c, -1), GWElement::one(c)));
    const auto f7 = BaseField::prime_field(7);
    EXPECT_TRUE(eq(GWElement::form(f7, 3, 2), GWElement::form(f7, 1, 2)));
    EXPECT_FALSE(eq(GWElement::form(f7, 3), GWElement::one(f7)));
    try {
        (void)sign_hom(GWElement::one(f7));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoRealPlace);
    }
    try {
        (void)(GWElement::one(f7) + GWElement::one(Q));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
}

TEST(GW, Invariants)
{
    const auto inv = invariants(GWElement::form(Q, 3) + GWElement::form(Q, 5));
    EXPECT_EQ(inv.rank, 2);
    EXPECT_EQ(inv.disc.rep(), 15);
    EXPECT_EQ(inv.signature, 2);
    ASSERT_TRUE(inv.hasse.has_value());
    EXPECT_EQ(inv.hasse->at(Place::prime(3)), -1); // (3,5)_3 = (5/3) = -1
    EXPECT_EQ(inv.hasse->at(Place::prime(5)), -1);
    EXPECT_EQ(inv.hasse->at(Place::real()), 1);
}

TEST(GW, TraceForms)
{
    const auto g = SqClassSubgroup::from_integers(Q, {3});
    EXPECT_TRUE(eq(trace_form(g), GWElement::form(Q, 2) + GWElement::form(Q, 6)));
    EXPECT_EQ(trace_form(SqClassSubgroup(Q)), GWElement::one(Q));
    EXPECT_EQ(trace_form(SqClassSubgroup::from_integers(Q, {2, 3})).rank(), 4);
}

TEST(GW, TextRoundTrip)
{
    verify::Generator gen(25);
    for (const auto& field : {Q, BaseField::prime_field(11), BaseField::reals()}) {
        for (int i = 0; i < 200; ++i) {
            const auto x = gen.element(field, 4, 5, 100);
            const auto text = to_string(x);
            EXPECT_EQ(parse_gw(field, text), x) << text;
        }
    }
    EXPECT_EQ(parse_gw(Q, "2H + <-3> - 2*<6/4>"),
              GWElement::hyperbolic(Q, 2) + GWElement::form(Q, -3) - GWElement::form(Q, 6, 2));
    EXPECT_EQ(parse_gw(Q, "3"), GWElement::form(Q, 1, 3));
    EXPECT_EQ(parse_gw(Q, "ℍ"), GWElement::hyperbolic(Q));
    for (const char* bad : {"", "<3", "2 <3> <5>", "<0>", "x"}) {
        try {
            (void)parse_gw(Q, bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ZeroInput) << bad;
        }
    }
}

TEST(GW, RenderingIsCanonical)
{
    EXPECT_EQ(to_string(GWElement::zero(Q)), "0");
    EXPECT_EQ(to_string(GWElement::form(Q, 1, 2) + GWElement::form(Q, -6)), "2⟨1⟩ + ⟨-6⟩");
    EXPECT_EQ(to_string(GWElement::form(Q, 2, -1)), "-⟨2⟩");
}
