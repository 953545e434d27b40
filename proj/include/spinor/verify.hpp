#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinor/orth_rep.hpp"

namespace spinor {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    long checked = 0;
    std::string detail;  // first mismatch, or a short summary
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckOutcome> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Catalogue regression: generated GL_2 spinorial lists vs the per-residue
/// fixture files, q in {3,...,27} odd prime powers, exact.
CheckOutcome check_catalogue_regression(const std::string& data_dir);

/// The n >= 3 family claims: Steinberg spinorial; all orthogonal principal
/// series spinorial (exhaustive for n <= 4, q <= 7, random symmetric tuples
/// otherwise); cuspidal m = psi_{n-1}(q)/2 spinorial; S(chi_0 o det) with
/// chi_0 odd aspinorial.
std::vector<CheckOutcome> check_series_claims(std::uint64_t seed);

/// Oracle vs decide_cyclic over every direct sum (total dim <= 12) of
/// trivial / sign / pullback permutation blocks for C_n, n <= 12.
CheckOutcome check_cyclic_agreement();

/// Oracle vs decide_elementary_abelian over all multiplicity vectors of the
/// 2^rank characters, rank 2 and 3, total dim in [1, 12].
CheckOutcome check_elem_abelian_agreement();

/// Oracle vs the exceptional-case rules on the curated GL_2(F_2) and
/// GL_2(F_3) models (with sign twists).
CheckOutcome check_exceptional_agreement();

/// Clifford square of the lift of a diagonal involution with m entries -1
/// has sign (-1)^{m(m+1)/2}, m <= 8.
CheckOutcome check_lemma_ab();

/// Property suite: cocycle law, decomposition-order independence, direct-sum
/// cocycle multiplicativity (with the determinant-parity correction), psi /
/// q-factorial divisibility, restriction stability on the cyclic family.
std::vector<CheckOutcome> check_properties(std::uint64_t seed);

/// suite in {catalogue, series, oracle, properties, all}.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const std::string& data_dir);

/// Restriction of a C_n representation to the subgroup C_d = <g^{n/d}>.
OrthRep restrict_cyclic(const OrthRep& rep, unsigned d);

}  // namespace spinor
