#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/ratmat.hpp"

namespace spinor {

using Perm = std::vector<unsigned>;

Perm perm_identity(unsigned n);
Perm perm_compose(const Perm& f, const Perm& g);  // (f∘g)(x) = f(g(x))
Perm perm_inverse(const Perm& f);

/// A finite group as an opaque multiplication table. Element 0 is the
/// identity. Construction validates identity/inverse laws and spot-checks
/// associativity on random triples.
class SmallGroup {
  public:
    SmallGroup(std::vector<std::vector<unsigned>> table, std::vector<unsigned> generators);

    unsigned order() const { return static_cast<unsigned>(table_.size()); }
    unsigned identity() const { return 0; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
    unsigned inv(unsigned a) const { return inverse_[a]; }
    unsigned power(unsigned a, unsigned long k) const;
    unsigned element_order(unsigned a) const;
    const std::vector<unsigned>& generators() const { return generators_; }

    /// True iff the listed element ids are closed under mul and inverses.
    bool is_subgroup(const std::vector<unsigned>& elems) const;

  private:
    std::vector<std::vector<unsigned>> table_;
    std::vector<unsigned> inverse_;
    std::vector<unsigned> generators_;
};

using GroupPtr = std::shared_ptr<const SmallGroup>;

/// Closure of a generating set under multiplication, BFS from the identity;
/// element ids are assigned in discovery order (deterministic for a fixed
/// generator list). Throws OrderBound if the closure exceeds `cap`.
template <typename Elem>
struct GeneratedGroup {
    GroupPtr group;
    std::vector<Elem> elements;  // indexed by element id

    /// Id of a concrete element, or -1 when absent.
    long find(const Elem& e) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == e) return static_cast<long>(i);
        return -1;
    }
};

GeneratedGroup<Perm> perm_group_closure(const std::vector<Perm>& gens, std::size_t cap = 10000);

/// Square matrix over the prime field F_p.
struct FpMat {
    unsigned p = 2;
    unsigned n = 0;
    std::vector<unsigned> e;  // row-major, entries in [0, p)

    static FpMat identity(unsigned p, unsigned n);
    static FpMat from_rows(unsigned p, const std::vector<std::vector<unsigned>>& rows);
    unsigned at(unsigned i, unsigned j) const { return e[i * n + j]; }
    FpMat operator*(const FpMat& o) const;
    bool operator==(const FpMat&) const = default;
    bool operator<(const FpMat& o) const { return e < o.e; }
};

GeneratedGroup<FpMat> fpmat_group_closure(const std::vector<FpMat>& gens, std::size_t cap = 10000);
GeneratedGroup<RatMat> ratmat_group_closure(const std::vector<RatMat>& gens, std::size_t cap = 10000);

/// The cyclic group C_n with element i = g^i.
GroupPtr cyclic_group(unsigned n);

/// Elementary abelian 2-group of the given rank; element ids are generator
/// bitmasks, multiplication is xor.
GroupPtr elementary_abelian_group(unsigned rank);

}  // namespace spinor
