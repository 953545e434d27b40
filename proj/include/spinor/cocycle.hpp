#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/group.hpp"
#include "spinor/orth_rep.hpp"

namespace spinor {

/// The {+1,-1}-valued extension cocycle of the Pin double cover pulled back
/// along a representation: c(g,h) compares the fixed lifts L(g)L(h) against
/// L(gh). Normalized (c(1,g) = c(g,1) = +1) and satisfying the cocycle law
/// c(g,h) c(gh,k) = c(h,k) c(g,hk), which validate() checks exhaustively.
struct SignCocycle {
    GroupPtr group;
    std::vector<std::int8_t> c;  // row-major order x order

    int sign(unsigned g, unsigned h) const { return c[g * group->order() + h]; }
    void validate() const;
};

/// One fixed unnormalized lift per element, kept as the list of mirror
/// vectors (so inverses come from reversing the list and dividing by the
/// norms, with no new decompositions). Immutable once built; lift_defect
/// reads it through const access, so distinct (g, h) pairs may be evaluated
/// concurrently after this sequential fixing phase.
struct ElementLifts {
    CliffordAlgebra algebra;
    std::vector<std::vector<std::vector<Rat>>> mirrors;  // per element
    std::vector<std::vector<Rat>> norms;                 // Phi(v,v) per mirror
    std::vector<CliffordElem> lift;                      // materialized product
};

/// Decomposes every representing matrix (optionally with a custom pivot
/// order per element). Caps: dim <= 16.
ElementLifts fix_lifts(const OrthRep& rep);
ElementLifts fix_lifts(const OrthRep& rep, const std::vector<std::vector<unsigned>>& pivot_orders);

/// lambda(g,h) = L(g) L(h) L(gh)^{-1} for the fixed lifts. The result must
/// be a nonzero rational scalar; anything else indicates an arithmetic or
/// decomposition bug and throws NonScalarDefect (never rounded away).
Rat lift_defect(const ElementLifts& lifts, const SmallGroup& group, unsigned g, unsigned h);

/// Extracts the full sign cocycle. The positive-definite form guarantees
/// the unnormalized-lift scalars are positive, so sign(lambda) equals the
/// Pin-level cocycle.
SignCocycle extract_cocycle(const OrthRep& rep);
SignCocycle extract_cocycle(const OrthRep& rep, const std::vector<std::vector<unsigned>>& pivot_orders);

/// Shuffled pivot orders for decomposition-order independence tests.
std::vector<std::vector<unsigned>> random_pivot_orders(const OrthRep& rep, std::uint64_t seed);

/// Solves eps(g) + eps(h) + eps(gh) = [c(g,h) = -1] over GF(2) with
/// eps(identity) = 0. Returns the witness assignment (indexed by element)
/// when the cocycle is a coboundary, nullopt otherwise.
std::optional<std::vector<std::uint8_t>> coboundary_witness(const SignCocycle& c);

bool is_coboundary(const SignCocycle& c);

/// True when the signed lifts (-1)^{eps(g)} L(g) multiply with positive
/// scalar defects everywhere, i.e. eps certifies the splitting.
bool witness_certifies(const SignCocycle& c, const std::vector<std::uint8_t>& eps);

/// The pointwise product of two cocycles of the same group (the cocycle of
/// a direct sum, by multiplicativity of lifts across orthogonal blocks).
SignCocycle pointwise_product(const SignCocycle& a, const SignCocycle& b);

struct OracleResult {
    bool spinorial = false;
    SignCocycle cocycle;
    std::optional<std::vector<std::uint8_t>> witness;
};

/// The brute-force decision: extract the cocycle and split it if possible.
/// Caps: dim <= 16 and |G| <= 64 (CapExceeded beyond).
OracleResult oracle_decide(const OrthRep& rep);

}  // namespace spinor
