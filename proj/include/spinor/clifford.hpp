#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spinor/numeric.hpp"
#include "spinor/ratmat.hpp"

namespace spinor {

/// Element of the rational Clifford algebra C(V) of a symmetric form Phi:
/// a finite map from basis-subset bitmasks (the monomial e_S, factors in
/// increasing index order) to nonzero rational coefficients. The defining
/// relation is v^2 = -Phi(v, v), so e_i e_j + e_j e_i = -2 Phi(e_i, e_j).
///
/// Terms are kept as a mask-sorted vector with unique masks and no zero
/// coefficients.
class CliffordElem {
  public:
    using Term = std::pair<std::uint32_t, Rat>;
    using Terms = std::vector<Term>;

    CliffordElem() = default;
    static CliffordElem scalar(const Rat& v);
    static CliffordElem monomial(std::uint32_t mask, const Rat& coeff);
    /// Sorts, combines equal masks, drops zeros.
    static CliffordElem from_raw(Terms raw);
    /// In-place variant of from_raw, reusing the buffer's capacity.
    void assign_normalized(Terms&& raw);
    /// Moves the term storage out (leaves this empty); pairs with
    /// assign_normalized for allocation-free fold loops.
    Terms take_terms() { return std::move(t_); }

    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.front().first == 0); }
    /// The coefficient of the empty monomial (0 when absent).
    Rat scalar_part() const;
    const Terms& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    /// Accumulates coeff on e_mask, dropping the term if it cancels.
    void add_term(std::uint32_t mask, const Rat& coeff);
    void add(const CliffordElem& other);
    void scale(const Rat& f);

    bool operator==(const CliffordElem&) const = default;

  private:
    friend class CliffordAlgebra;  // in-place fold fast paths
    Terms t_;
};

/// The Clifford algebra of a fixed symmetric positive form on Q^dim. The
/// basis e_1..e_dim need not be orthogonal; products against non-diagonal
/// forms pick up the cross terms -2 Phi(e_i, e_j). Dimension is capped at
/// 16 so bitmask monomials fit comfortably.
class CliffordAlgebra {
  public:
    explicit CliffordAlgebra(RatMat form);

    std::size_t dim() const { return dim_; }
    const RatMat& form() const { return form_; }

    /// Embeds a coordinate vector of V as a degree-1 element.
    CliffordElem vector(const std::vector<Rat>& coords) const;

    CliffordElem mul(const CliffordElem& a, const CliffordElem& b) const;

    /// a * (sum_j coords_j e_j): the workhorse of lift folding.
    CliffordElem mul_vector(const CliffordElem& a, const std::vector<Rat>& coords) const;

    /// a <- a * (sum_j coords_j e_j), recycling `scratch` across calls.
    void fold_vector(CliffordElem& a, const std::vector<Rat>& coords,
                     CliffordElem::Terms& scratch) const;

    /// Phi(v, v) for a coordinate vector.
    Rat vector_norm(const std::vector<Rat>& coords) const;

  private:
    void mul_monomial_gen(std::uint32_t mask, const Rat& coeff, unsigned j, std::uint32_t append,
                          CliffordElem::Terms& raw) const;

    RatMat form_;
    std::size_t dim_;
    bool diagonal_;
    std::vector<bool> unit_diag_;  // form_.at(j,j) == 1, for the common B = I case
};

/// Convenience wrapper matching the operation contract.
CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b, const RatMat& form);

/// Constructive Cartan-Dieudonne over Q: writes the B-orthogonal M as a
/// product of at most dim reflections r_v (in left-to-right product order),
/// each with B(v, v) > 0. Positive-definiteness of B excludes isotropic
/// obstructions: every non-fixed pivot column yields an anisotropic mirror
/// vector. The factorization is verified exactly: applying the mirrors in
/// reverse reduces M to the identity, and reflections are involutions, so
/// the check is equivalent to multiplying the reflections back.
///
/// `pivot_order` selects the order in which basis vectors are fixed; it
/// must be a permutation of 0..dim-1. Defaults to the natural order.
std::vector<std::vector<Rat>> reflection_decompose(const RatMat& M, const RatMat& B);
std::vector<std::vector<Rat>> reflection_decompose(const RatMat& M, const RatMat& B,
                                                   const std::vector<unsigned>& pivot_order);

/// The unnormalized lift v_1 ... v_k of M through the reflection
/// decomposition. With B positive definite this equals a positive real
/// multiple of a Pin(V) element covering M, so sign comparisons between two
/// such lifts of the same element are well-defined. No square root is ever
/// taken; all arithmetic is exact.
CliffordElem lift_element(const RatMat& M, const RatMat& B);

/// Applies the reflection r_v (x -> x - 2 B(x,v)/B(v,v) v) to every column
/// of M, in place.
void apply_reflection(RatMat& M, const RatMat& B, const std::vector<Rat>& v);

}  // namespace spinor
