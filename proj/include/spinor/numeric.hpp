#pragma once

#include <gmpxx.h>

#include <string>

namespace spinor {

// Exact arithmetic everywhere: no fixed-width overflow is permitted in any
// character formula, so the whole library computes with GMP integers and
// rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline long residue_mod4(const Int& m) {
    return mpz_class(mod_floor(m, 4)).get_si();
}

// The involution-lift congruence: m ≡ 0 or 3 (mod 4).
inline bool mod4_is_0_or_3(const Int& m) {
    long r = residue_mod4(m);
    return r == 0 || r == 3;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline int sign_of(const Rat& v) { return sgn(v); }

}  // namespace spinor
