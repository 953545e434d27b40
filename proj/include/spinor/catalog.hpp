#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinor/char_pair.hpp"
#include "spinor/chars.hpp"
#include "spinor/prime_power.hpp"

namespace spinor {

/// The eight families of orthogonally irreducible representations of
/// GL_2(F_q), q odd. An OIR is either irreducible orthogonal, or
/// S(pi) = pi + pi^dual for pi irreducible but not orthogonal; the Doubled*
/// families are the latter.
enum class OirFamily {
    Linear,                  // chi quadratic
    PrincipalSeries,         // pi(chi, chi'), {chi,chi'} inversion-symmetric, chi != chi'
    SteinbergTwist,          // St (x) chi, chi quadratic
    Cuspidal,                // pi_theta, theta regular with theta^tau = theta^{-1}
    DoubledLinear,           // S(chi), chi^2 != 1
    DoubledPrincipalSeries,  // S(pi(chi1, chi2)), multiset not inversion-symmetric
    DoubledSteinbergTwist,   // S(St (x) chi), chi^2 != 1
    DoubledCuspidal,         // S(pi_theta), theta regular, theta^tau != theta^{-1}
};

const char* family_name(OirFamily f);

/// A catalogue entry in canonical parameter form. Parameter meaning:
///   Linear / SteinbergTwist / DoubledLinear / DoubledSteinbergTwist:
///       a = index of chi mod q-1 (Doubled*: canonical under chi <-> chi^{-1})
///   PrincipalSeries / DoubledPrincipalSeries:
///       (a, b) = indices of (chi, chi') mod q-1 with a <= b
///       (Doubled: lexicographic minimum under simultaneous inversion)
///   Cuspidal / DoubledCuspidal:
///       a = index of theta mod q^2-1, minimal in its tau-orbit
///       (Doubled: minimal in its orbit under tau and inversion)
struct OirDescriptor {
    OirFamily family;
    PrimePower q;
    unsigned long a = 0;
    unsigned long b = 0;

    std::string describe() const;
};

/// Checks the family invariants (orthogonality constraints and canonical
/// parameter form); throws InvariantViolation.
void validate(const OirDescriptor& d);

/// Streams the complete duplicate-free catalogue of OIRs of GL_2(F_q) in
/// deterministic order (family, then canonical parameters ascending).
/// Throws EvenQ: the catalogue formulas assume q odd.
void enumerate_oirs_gl2(const PrimePower& q, const std::function<void(const OirDescriptor&)>& emit);
std::vector<OirDescriptor> enumerate_oirs_gl2(const PrimePower& q);

/// Exact (Theta(1), Theta(a_1)) for a GL_2 catalogue entry:
///   Linear chi             -> (1, chi(-1))
///   PrincipalSeries        -> (q+1, chi(-1) + chi'(-1))
///   SteinbergTwist chi     -> (q, chi(-1))
///   Cuspidal               -> (q-1, 0)
///   Doubled*               -> both entries doubled (a_1 is an involution, so
///                             Theta_pi(a_1) is real and dual-invariant).
CharPair char_pair(const OirDescriptor& d);

// --- GL_n families for n >= 3 ---

struct GlnSteinberg {
    unsigned n;
    PrimePower q;
};

struct GlnPrincipalSeries {
    unsigned n;
    PrimePower q;
    std::vector<unsigned long> chi_indices;  // n character indices mod q-1
};

/// theta is a character of F_{q^n}^x given by its exponent mod q^n - 1.
struct GlnCuspidal {
    unsigned n;
    PrimePower q;
    Int theta_index;
};

/// Steinberg: (q^{n(n-1)/2}, q^{(n-1)(n-2)/2}).
CharPair char_pair_gl_n(const GlnSteinberg& s);

/// Principal series: ([n]_q!, [n-1]_q! * sum chi_i(-1)). Requires the
/// multiset {chi_i} to equal {chi_i^{-1}} (NotOrthogonal otherwise).
CharPair char_pair_gl_n(const GlnPrincipalSeries& ps);

/// Cuspidal: (psi_{n-1}(q), 0). Requires theta regular and equal to its own
/// inverse under the order-2 Galois symmetry x -> x^{q^{n/2}}; such a
/// symmetry exists only for n even, so odd n throws NotOrthogonal for every
/// theta. Throws BadRank for n < 3.
CharPair char_pair_gl_n(const GlnCuspidal& c);

/// The family-level cuspidal pair (psi_{n-1}(q), 0), independent of a
/// specific theta. The congruence claims about cuspidal m hold at this
/// level for every n >= 3 (vacuously at the theta level when n is odd).
CharPair cuspidal_family_pair(unsigned n, const PrimePower& q);

/// theta regular as a character of F_{q^n}^x: distinct from all its Galois
/// translates theta^{q^j}, 1 <= j < n.
bool is_regular_gl_n(const GlnCuspidal& c);

/// Criterion for Ind_B^G(chi_1 x ... x chi_n) to be orthogonal: the multiset
/// of indices equals the multiset of negated indices mod q-1.
/// Throws MixedModulus if the characters do not share a modulus.
bool is_orthogonal_principal_series(const std::vector<LinearChar>& chars);

}  // namespace spinor
