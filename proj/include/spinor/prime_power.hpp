#pragma once

#include "spinor/errors.hpp"

namespace spinor {

/// A prime power q = p^r, q >= 2, with its parity class cached.
/// All group-family parameters in the library are carried as PrimePower
/// so that the q mod 4 branch of every decision rule is always available.
struct PrimePower {
    unsigned long q = 0;
    unsigned long p = 0;
    unsigned r = 0;

    bool is_even() const { return p == 2; }
    /// q mod 4, which is 0 or 2 exactly when q is even.
    unsigned mod4() const { return static_cast<unsigned>(q % 4); }
    unsigned mod8() const { return static_cast<unsigned>(q % 8); }
};

/// Factors q as p^r; throws NotAPrimePower for inputs like 6 or 12.
PrimePower parse_prime_power(unsigned long q);

}  // namespace spinor
