#pragma once

#include <string>
#include <vector>

#include "spinor/group.hpp"
#include "spinor/numeric.hpp"
#include "spinor/ratmat.hpp"

namespace spinor {

/// A finite group presented by exact rational matrices preserving a
/// positive-definite symmetric form: M(g)^T B M(g) = B for every g.
///
/// validate() checks the full invariant set exhaustively (homomorphism
/// table, form preservation, positive-definiteness) and is applied to every
/// directly-constructed representation. The combinators below (direct_sum,
/// sign_twist, permutation actions of an already-validated group) preserve
/// validity, which is what the mass enumerations in the verification suites
/// rely on.
struct OrthRep {
    GroupPtr group;
    std::size_t dim = 0;
    RatMat form;                  // B, positive definite
    std::vector<RatMat> matrix;   // indexed by element id
    std::string name;

    Rat trace_of(unsigned g) const { return matrix.at(g).trace(); }
    /// Integer character value; traces of our representations are rational
    /// algebraic integers, hence integers.
    Int char_value(unsigned g) const;
};

/// Exhaustive invariant check; throws InvariantViolation with the offending
/// pair/element named.
void validate_orth_rep(const OrthRep& rep);

/// Permutation representation from an action table (one permutation per
/// element id, composing like the group). B = identity.
OrthRep perm_matrix_rep(GroupPtr group, const std::vector<Perm>& action, std::string name = {});

/// Permutation representation on left cosets gH. Throws NotSubgroup.
OrthRep coset_perm_rep(GroupPtr group, const std::vector<unsigned>& subgroup, std::string name = {});

/// Twist by a quadratic character: matrices scaled by chi(g) in {+1,-1}.
/// chi is validated as a homomorphism.
OrthRep sign_twist(const OrthRep& rep, const std::vector<int>& chi, std::string name = {});

OrthRep direct_sum(const OrthRep& a, const OrthRep& b);

/// Direct sum of one-dimensional +-1 characters: chars[k][g] is the value of
/// the k-th summand at element g. Every matrix is diagonal.
OrthRep diagonal_char_rep(GroupPtr group, const std::vector<std::vector<int>>& chars,
                          std::string name = {});

/// The left-regular permutation representation.
OrthRep regular_rep(GroupPtr group, std::string name = {});

/// Pullback of the translation action of Z/d along C_n -> Z/d (d | n):
/// the d-dimensional permutation model with g^k acting by +k mod d.
OrthRep cyclic_perm_model(GroupPtr cyclic_n, unsigned d, std::string name = {});

/// The sign character of C_n (n even) as a +-1 vector indexed by element.
std::vector<int> cyclic_sign_character(unsigned n);

/// sgn of a matrix group over F_p (p odd): the quadratic character of the
/// determinant, +1 on squares in F_p^x.
std::vector<int> det_sign_character(const GeneratedGroup<FpMat>& g);

}  // namespace spinor
