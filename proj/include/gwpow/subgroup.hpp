#pragma once

// Finite subgroups G of k^x/(k^x)^2. Such a G encodes the multiquadratic
// etale algebra k_G = k(sqrt g : g in G), of degree |G| = 2^rank.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "gwpow/fields.hpp"

namespace gwpow {

class SqClassSubgroup {
public:
    /// Trivial subgroup: k_G = k.
    explicit SqClassSubgroup(const BaseField& field) : field_(field), elements_{SquareClass::one(field)} {}

    /// Subgroup spanned by `generators`, which must be nontrivial and
    /// independent over F_2.
    SqClassSubgroup(const BaseField& field, const std::vector<SquareClass>& generators) : SqClassSubgroup(field)
    {
        for (const auto& g : generators) {
            require_same_field(field, g.field());
            if (g.is_trivial()) {
                fail(ErrorKind::TrivialClass, "subgroup generator is a square");
            }
            if (contains(g)) {
                fail(ErrorKind::NotIndependent, "generator <" + std::to_string(g.rep()) + "> lies in the span of the others");
            }
            adjoin(g);
        }
        canonicalize();
    }

    static SqClassSubgroup from_integers(const BaseField& field, std::initializer_list<Int> gens)
    {
        return from_integers(field, std::vector<Int>(gens));
    }

    static SqClassSubgroup from_integers(const BaseField& field, const std::vector<Int>& gens)
    {
        std::vector<SquareClass> classes;
        classes.reserve(gens.size());
        for (Int g : gens) {
            classes.push_back(square_class(field, g));
        }
        return SqClassSubgroup(field, classes);
    }

    /// Subgroup generated by arbitrary classes (dependencies and squares allowed).
    static SqClassSubgroup span(const BaseField& field, const std::vector<SquareClass>& classes)
    {
        SqClassSubgroup g(field);
        for (const auto& c : classes) {
            require_same_field(field, c.field());
            if (!g.contains(c)) {
                g.adjoin(c);
            }
        }
        g.canonicalize();
        return g;
    }

    [[nodiscard]] const BaseField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
    [[nodiscard]] std::size_t rank() const noexcept { return generators_.size(); }
    [[nodiscard]] bool is_trivial() const noexcept { return elements_.size() == 1; }

    /// All 2^rank elements, sorted.
    [[nodiscard]] const std::vector<SquareClass>& elements() const noexcept { return elements_; }
    /// Canonical basis: greedily the least element not spanned by the previous ones.
    [[nodiscard]] const std::vector<SquareClass>& generators() const noexcept { return generators_; }

    [[nodiscard]] bool contains(const SquareClass& c) const
    {
        return std::binary_search(elements_.begin(), elements_.end(), c);
    }

    /// prod_i generators()[i]^(bit i of mask)
    [[nodiscard]] SquareClass element_at(std::uint64_t mask) const
    {
        auto result = SquareClass::one(field_);
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if ((mask >> i) & 1U) {
                result = result * generators_[i];
            }
        }
        return result;
    }

    /// Coordinates of `c` in the canonical basis; c must be an element.
    [[nodiscard]] std::uint64_t coordinates(const SquareClass& c) const
    {
        for (std::uint64_t mask = 0; mask < order(); ++mask) {
            if (element_at(mask) == c) {
                return mask;
            }
        }
        fail(ErrorKind::OutOfRange, "class <" + std::to_string(c.rep()) + "> is not in the subgroup");
    }

    friend SqClassSubgroup product(const SqClassSubgroup& a, const SqClassSubgroup& b)
    {
        require_same_field(a.field_, b.field_);
        auto classes = a.generators_;
        classes.insert(classes.end(), b.generators_.begin(), b.generators_.end());
        return span(a.field_, classes);
    }

    friend SqClassSubgroup intersection(const SqClassSubgroup& a, const SqClassSubgroup& b)
    {
        require_same_field(a.field_, b.field_);
        std::vector<SquareClass> common;
        std::set_intersection(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                              std::back_inserter(common));
        return span(a.field_, common);
    }

    friend bool operator==(const SqClassSubgroup& a, const SqClassSubgroup& b)
    {
        return a.field_ == b.field_ && a.elements_ == b.elements_;
    }

    friend bool operator<(const SqClassSubgroup& a, const SqClassSubgroup& b)
    {
        if (a.field_ != b.field_) {
            return a.field_ < b.field_;
        }
        if (a.elements_.size() != b.elements_.size()) {
            return a.elements_.size() < b.elements_.size();
        }
        return a.elements_ < b.elements_;
    }

private:
    void adjoin(const SquareClass& g)
    {
        const auto old = elements_;
        for (const auto& e : old) {
            elements_.push_back(e * g);
        }
        std::sort(elements_.begin(), elements_.end());
    }

    void canonicalize()
    {
        generators_.clear();
        std::vector<SquareClass> spanned{SquareClass::one(field_)};
        for (const auto& e : elements_) {
            if (std::find(spanned.begin(), spanned.end(), e) != spanned.end()) {
                continue;
            }
            generators_.push_back(e);
            const auto old = spanned;
            for (const auto& s : old) {
                spanned.push_back(s * e);
            }
        }
    }

    BaseField field_;
    std::vector<SquareClass> elements_;
    std::vector<SquareClass> generators_;
};

} // namespace gwpow
