#pragma once

#include "spinor/errors.hpp"
#include "spinor/numeric.hpp"
#include "spinor/prime_power.hpp"

namespace spinor {

/// A character of a cyclic group of order `modulus` (F_q^x or F_{q^2}^x),
/// stored as the exponent of a fixed abstract generator character:
/// chi = omega^index. No root of unity is ever materialized; the decision
/// rules only need values at +-1, which are signs computable as parities.
struct LinearChar {
    unsigned long modulus = 1;
    unsigned long index = 0;  // 0 <= index < modulus

    LinearChar() = default;
    LinearChar(unsigned long modulus_, unsigned long index_);

    /// Normalizes an arbitrary (possibly negative) exponent.
    static LinearChar from_exponent(unsigned long modulus, long long e);

    static LinearChar trivial(unsigned long modulus) { return {modulus, 0}; }
    /// The unique nontrivial quadratic character; requires even modulus.
    static LinearChar sgn(unsigned long modulus);

    LinearChar inverse() const { return {modulus, index == 0 ? 0 : modulus - index}; }
    bool is_quadratic() const { return (unsigned __int128)index * 2 % modulus == 0; }
    bool is_trivial() const { return index == 0; }

    bool operator==(const LinearChar&) const = default;
};

/// chi(-1) = (-1)^index, where -1 is the unique order-2 element g^{modulus/2}.
/// Throws OddModulus when the modulus is odd: there -1 = 1 in the underlying
/// field and callers must branch on the parity of q explicitly.
int eval_at_minus_one(const LinearChar& chi);

/// A character theta = omega^index of F_{q^2}^x, the elliptic torus of
/// GL_2(F_q). tau is the nontrivial Galois symmetry x -> x^q.
struct RegularChar {
    PrimePower q;
    unsigned long index = 0;  // mod q^2 - 1

    unsigned long modulus() const { return q.q * q.q - 1; }
    /// theta composed with tau, i.e. index -> q * index.
    RegularChar galois() const {
        unsigned long t =
            static_cast<unsigned long>((unsigned __int128)index * q.q % modulus());
        return {q, t};
    }
};

/// theta != theta^tau, equivalently (q+1) does not divide index.
bool is_regular(const RegularChar& theta);

/// theta^tau = theta^{-1}, i.e. index * (q+1) ≡ 0 mod q^2-1.
/// Requires is_regular; throws NotRegular otherwise.
bool is_orthogonal_theta(const RegularChar& theta);

/// [n]_q! = prod_{i=1}^{n} (q^i - 1)/(q - 1); the degree of the full
/// principal series of GL_n(F_q). Divisible by 8 for n >= 4, q odd.
Int q_factorial(unsigned n, const PrimePower& q);

/// psi_m(q) = prod_{i=1}^{m} (q^i - 1); cuspidal degree at m = n-1.
/// psi_0 = 1, and psi_m ≡ 0 mod 8 for m >= 2, q odd.
Int psi(unsigned m, const PrimePower& q);

}  // namespace spinor
