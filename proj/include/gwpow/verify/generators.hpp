#pragma once

// Seeded random inputs for property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "gwpow/gw.hpp"

namespace gwpow::verify {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    Int integer(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

    Int nonzero(Int bound)
    {
        Int v = 0;
        while (v == 0) {
            v = integer(-bound, bound);
        }
        return v;
    }

    /// Nonzero integer prime to p (p = 0: any nonzero).
    Int unit(Int bound, Int p)
    {
        for (;;) {
            const Int v = nonzero(bound);
            if (p == 0 || v % p != 0) {
                return v;
            }
        }
    }

    Rational rational(Int num_bound, Int den_bound) { return Rational{nonzero(num_bound), integer(1, den_bound)}; }

    /// Square class of a random element of the field.
    SquareClass square_class_in(const BaseField& field, Int bound = 40)
    {
        const Int p = field.kind() == BaseField::Kind::PrimeField ? field.characteristic() : 0;
        return square_class(field, unit(bound, p));
    }

    /// Sum of up to `terms` multiples of random rank-one forms, coefficients in [-coeff, coeff].
    GWElement element(const BaseField& field, int terms = 3, Int coeff = 2, Int bound = 12)
    {
        GWElement x(field);
        const auto count = integer(0, terms);
        for (Int i = 0; i < count; ++i) {
            x.accumulate(square_class_in(field, bound), integer(-coeff, coeff));
        }
        return x;
    }

    /// Genuine form: nonnegative coefficients.
    GWElement genuine(const BaseField& field, int terms = 3, Int coeff = 2, Int bound = 12)
    {
        GWElement x(field);
        const auto count = integer(1, terms);
        for (Int i = 0; i < count; ++i) {
            x.accumulate(square_class_in(field, bound), integer(1, coeff));
        }
        return x;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace gwpow::verify
