#include "spinor/cocycle.hpp"

#include <algorithm>
#include <random>

#include "spinor/errors.hpp"

namespace spinor {

void SignCocycle::validate() const {
    unsigned n = group->order();
    unsigned id = group->identity();
    for (unsigned g = 0; g < n; ++g)
        if (sign(id, g) != 1 || sign(g, id) != 1)
            throw InvariantViolation("cocycle is not normalized at the identity");
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h)
            for (unsigned k = 0; k < n; ++k)
                if (sign(g, h) * sign(group->mul(g, h), k) !=
                    sign(h, k) * sign(g, group->mul(h, k)))
                    throw InvariantViolation("cocycle law fails at (" + std::to_string(g) + ", " +
                                             std::to_string(h) + ", " + std::to_string(k) + ")");
}

ElementLifts fix_lifts(const OrthRep& rep) {
    std::vector<unsigned> natural(rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) natural[i] = i;
    return fix_lifts(rep, std::vector<std::vector<unsigned>>(rep.group->order(), natural));
}

ElementLifts fix_lifts(const OrthRep& rep, const std::vector<std::vector<unsigned>>& pivot_orders) {
    if (rep.dim > 16) throw CapExceeded("oracle dimension capped at 16, got " + std::to_string(rep.dim));
    unsigned n = rep.group->order();
    if (pivot_orders.size() != n) throw InvariantViolation("one pivot order per element required");
    ElementLifts lifts{CliffordAlgebra(rep.form), {}, {}, {}};
    lifts.mirrors.reserve(n);
    lifts.norms.reserve(n);
    lifts.lift.reserve(n);
    CliffordElem::Terms scratch;
    for (unsigned g = 0; g < n; ++g) {
        auto mirrors = reflection_decompose(rep.matrix[g], rep.form, pivot_orders[g]);
        std::vector<Rat> norms;
        norms.reserve(mirrors.size());
        CliffordElem acc = CliffordElem::scalar(1);
        for (const auto& v : mirrors) {
            norms.push_back(lifts.algebra.vector_norm(v));
            lifts.algebra.fold_vector(acc, v, scratch);
        }
        lifts.mirrors.push_back(std::move(mirrors));
        lifts.norms.push_back(std::move(norms));
        lifts.lift.push_back(std::move(acc));
    }
    return lifts;
}

namespace {

Rat lift_defect_impl(const ElementLifts& lifts, const SmallGroup& group, unsigned g, unsigned h,
                     CliffordElem& acc, CliffordElem::Terms& scratch) {
    unsigned gh = group.mul(g, h);
    // L(g) L(h) L(gh)^{-1}, with L(gh)^{-1} folded as reversed mirrors and
    // one final division by prod(-Phi(v,v))  (v^{-1} = -v / Phi(v,v))
    acc = lifts.lift[g];
    for (const auto& v : lifts.mirrors[h]) lifts.algebra.fold_vector(acc, v, scratch);
    const auto& mirrors = lifts.mirrors[gh];
    for (std::size_t i = mirrors.size(); i-- > 0;) lifts.algebra.fold_vector(acc, mirrors[i], scratch);
    if (!acc.is_scalar())
        throw NonScalarDefect("lift defect at (" + std::to_string(g) + ", " + std::to_string(h) +
                              ") is not scalar: arithmetic or decomposition bug");
    Rat scale = 1;
    for (const Rat& nv : lifts.norms[gh]) scale *= -nv;
    Rat value = acc.scalar_part() / scale;
    if (value == 0)
        throw NonScalarDefect("vanishing lift defect: lifts are not invertible as expected");
    return value;
}

}  // namespace

Rat lift_defect(const ElementLifts& lifts, const SmallGroup& group, unsigned g, unsigned h) {
    CliffordElem acc;
    CliffordElem::Terms scratch;
    return lift_defect_impl(lifts, group, g, h, acc, scratch);
}

namespace {

SignCocycle cocycle_from_lifts(const OrthRep& rep, const ElementLifts& lifts) {
    unsigned n = rep.group->order();
    unsigned id = rep.group->identity();
    SignCocycle out{rep.group, std::vector<std::int8_t>(std::size_t(n) * n, 1)};
    CliffordElem acc;
    CliffordElem::Terms scratch;
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h) {
            // L(identity) is the empty product, so those defects are the
            // positive scalars L(h) L(h)^{-1}; the entries stay +1
            if (g == id || h == id) continue;
            out.c[g * n + h] =
                static_cast<std::int8_t>(sign_of(lift_defect_impl(lifts, *rep.group, g, h, acc, scratch)));
        }
    out.validate();
    return out;
}

}  // namespace

SignCocycle extract_cocycle(const OrthRep& rep) {
    return cocycle_from_lifts(rep, fix_lifts(rep));
}

SignCocycle extract_cocycle(const OrthRep& rep, const std::vector<std::vector<unsigned>>& pivot_orders) {
    return cocycle_from_lifts(rep, fix_lifts(rep, pivot_orders));
}

std::vector<std::vector<unsigned>> random_pivot_orders(const OrthRep& rep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<unsigned> natural(rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) natural[i] = i;
    std::vector<std::vector<unsigned>> orders(rep.group->order(), natural);
    for (auto& o : orders) std::shuffle(o.begin(), o.end(), rng);
    return orders;
}

std::optional<std::vector<std::uint8_t>> coboundary_witness(const SignCocycle& c) {
    unsigned n = c.group->order();
    unsigned id = c.group->identity();
    if (n > 64) throw CapExceeded("coboundary solver capped at group order 64");
    // variables: eps(g) for g != identity; eps(identity) = 0.
    // rows: bitmask over elements (bit id never set) plus rhs
    std::vector<std::uint64_t> rows;
    std::vector<std::uint8_t> rhs;
    for (unsigned g = 0; g < n; ++g) {
        for (unsigned h = 0; h < n; ++h) {
            std::uint64_t mask = 0;
            auto flip = [&](unsigned e) {
                if (e != id) mask ^= 1ull << e;
            };
            flip(g);
            flip(h);
            flip(c.group->mul(g, h));
            std::uint8_t b = c.sign(g, h) == -1 ? 1 : 0;
            if (mask == 0) {
                if (b) return std::nullopt;  // forced contradiction, e.g. 0 = 1
                continue;
            }
            rows.push_back(mask);
            rhs.push_back(b);
        }
    }
    // Gaussian elimination over GF(2)
    std::vector<std::uint64_t> basis(n, 0);
    std::vector<std::uint8_t> basis_rhs(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t row = rows[r];
        std::uint8_t b = rhs[r];
        while (row) {
            unsigned lead = static_cast<unsigned>(std::countr_zero(row));
            if (basis[lead] == 0) {
                basis[lead] = row;
                basis_rhs[lead] = b;
                break;
            }
            row ^= basis[lead];
            b ^= basis_rhs[lead];
        }
        if (row == 0 && b) return std::nullopt;
    }
    // back-substitute, free variables = 0
    std::vector<std::uint8_t> eps(n, 0);
    for (unsigned lead = n; lead-- > 0;) {
        if (basis[lead] == 0) continue;
        std::uint8_t v = basis_rhs[lead];
        std::uint64_t rest = basis[lead] & ~(1ull << lead);
        while (rest) {
            unsigned k = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            v ^= eps[k];
        }
        eps[lead] = v;
    }
    return eps;
}

bool is_coboundary(const SignCocycle& c) { return coboundary_witness(c).has_value(); }

bool witness_certifies(const SignCocycle& c, const std::vector<std::uint8_t>& eps) {
    unsigned n = c.group->order();
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h) {
            int sign_fix = (eps[g] ^ eps[h] ^ eps[c.group->mul(g, h)]) ? -1 : 1;
            if (c.sign(g, h) * sign_fix != 1) return false;
        }
    return true;
}

SignCocycle pointwise_product(const SignCocycle& a, const SignCocycle& b) {
    if (a.group != b.group) throw InvariantViolation("cocycle product needs a shared group");
    SignCocycle out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = static_cast<std::int8_t>(out.c[i] * b.c[i]);
    return out;
}

OracleResult oracle_decide(const OrthRep& rep) {
    if (rep.group->order() > 64)
        throw CapExceeded("oracle group order capped at 64, got " + std::to_string(rep.group->order()));
    OracleResult out;
    out.cocycle = extract_cocycle(rep);
    out.witness = coboundary_witness(out.cocycle);
    out.spinorial = out.witness.has_value();
    return out;
}

}  // namespace spinor
