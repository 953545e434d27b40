#include "spinor/group.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace spinor {

Perm perm_identity(unsigned n) {
    Perm p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw DimensionMismatch("permutation degree mismatch");
    Perm out(f.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
}

Perm perm_inverse(const Perm& f) {
    Perm out(f.size());
    for (unsigned i = 0; i < f.size(); ++i) out[f[i]] = i;
    return out;
}

SmallGroup::SmallGroup(std::vector<std::vector<unsigned>> table, std::vector<unsigned> generators)
    : table_(std::move(table)), generators_(std::move(generators)) {
    unsigned n = order();
    if (n == 0) throw InvariantViolation("empty group table");
    inverse_.assign(n, n);
    for (unsigned a = 0; a < n; ++a) {
        if (table_[a].size() != n) throw InvariantViolation("ragged group table");
        if (table_[0][a] != a || table_[a][0] != a)
            throw InvariantViolation("element 0 is not an identity");
        for (unsigned b = 0; b < n; ++b) {
            if (table_[a][b] >= n) throw InvariantViolation("group table entry out of range");
            if (table_[a][b] == 0) inverse_[a] = b;
        }
        if (inverse_[a] == n) throw InvariantViolation("element without inverse");
    }
    // associativity spot-check
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    for (int t = 0; t < 96; ++t) {
        unsigned a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InvariantViolation("group table is not associative");
    }
}

unsigned SmallGroup::power(unsigned a, unsigned long k) const {
    unsigned long reduced = k % element_order(a);
    unsigned r = identity();
    for (unsigned long i = 0; i < reduced; ++i) r = mul(r, a);
    return r;
}

unsigned SmallGroup::element_order(unsigned a) const {
    unsigned r = a, n = 1;
    while (r != identity()) {
        r = mul(r, a);
        ++n;
    }
    return n;
}

bool SmallGroup::is_subgroup(const std::vector<unsigned>& elems) const {
    std::vector<bool> in(order(), false);
    for (unsigned e : elems) {
        if (e >= order()) return false;
        in[e] = true;
    }
    if (!in[identity()]) return false;
    for (unsigned a : elems)
        for (unsigned b : elems)
            if (!in[mul(a, b)]) return false;
    return true;
}

namespace {

template <typename Elem, typename MulFn>
GeneratedGroup<Elem> closure_impl(const std::vector<Elem>& gens, const Elem& id, MulFn mul,
                                  std::size_t cap) {
    std::map<Elem, unsigned> ids;
    std::vector<Elem> elems;
    std::deque<unsigned> todo;
    auto add = [&](const Elem& e) -> unsigned {
        auto [it, fresh] = ids.emplace(e, static_cast<unsigned>(elems.size()));
        if (fresh) {
            if (elems.size() >= cap)
                throw OrderBound("group closure exceeds the cap of " + std::to_string(cap));
            elems.push_back(e);
            todo.push_back(it->second);
        }
        return it->second;
    };
    add(id);
    while (!todo.empty()) {
        unsigned cur = todo.front();
        todo.pop_front();
        for (const Elem& g : gens) {
            Elem prod = mul(elems[cur], g);
            add(prod);
        }
    }
    // right-multiplication by generators reaches everything, but products of
    // arbitrary pairs are needed for the table
    unsigned n = static_cast<unsigned>(elems.size());
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            Elem prod = mul(elems[a], elems[b]);
            auto it = ids.find(prod);
            if (it == ids.end()) throw InvariantViolation("closure is not multiplication-closed");
            table[a][b] = it->second;
        }
    }
    std::vector<unsigned> gen_ids;
    for (const Elem& g : gens) gen_ids.push_back(ids.at(g));
    GeneratedGroup<Elem> out;
    out.group = std::make_shared<SmallGroup>(std::move(table), std::move(gen_ids));
    out.elements = std::move(elems);
    return out;
}

}  // namespace

GeneratedGroup<Perm> perm_group_closure(const std::vector<Perm>& gens, std::size_t cap) {
    if (gens.empty()) throw InvariantViolation("need at least one generator");
    Perm id = perm_identity(static_cast<unsigned>(gens.front().size()));
    return closure_impl<Perm>(gens, id, perm_compose, cap);
}

FpMat FpMat::identity(unsigned p, unsigned n) {
    FpMat m{p, n, std::vector<unsigned>(n * n, 0)};
    for (unsigned i = 0; i < n; ++i) m.e[i * n + i] = 1;
    return m;
}

FpMat FpMat::from_rows(unsigned p, const std::vector<std::vector<unsigned>>& rows) {
    FpMat m{p, static_cast<unsigned>(rows.size()), {}};
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw DimensionMismatch("FpMat must be square");
        for (unsigned x : row) m.e.push_back(x % p);
    }
    return m;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (n != o.n || p != o.p) throw DimensionMismatch("FpMat product mismatch");
    FpMat out{p, n, std::vector<unsigned>(n * n, 0)};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            unsigned a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                out.e[i * n + j] = (out.e[i * n + j] + a * o.at(k, j)) % p;
        }
    return out;
}

GeneratedGroup<FpMat> fpmat_group_closure(const std::vector<FpMat>& gens, std::size_t cap) {
    if (gens.empty()) throw InvariantViolation("need at least one generator");
    FpMat id = FpMat::identity(gens.front().p, gens.front().n);
    return closure_impl<FpMat>(gens, id, [](const FpMat& a, const FpMat& b) { return a * b; }, cap);
}

GeneratedGroup<RatMat> ratmat_group_closure(const std::vector<RatMat>& gens, std::size_t cap) {
    if (gens.empty()) throw InvariantViolation("need at least one generator");
    RatMat id = RatMat::identity(gens.front().rows());
    return closure_impl<RatMat>(gens, id, [](const RatMat& a, const RatMat& b) { return a * b; }, cap);
}

GroupPtr cyclic_group(unsigned n) {
    if (n == 0) throw InvariantViolation("cyclic group order must be positive");
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    std::vector<unsigned> gens;
    if (n > 1) gens.push_back(1);
    return std::make_shared<SmallGroup>(std::move(table), std::move(gens));
}

GroupPtr elementary_abelian_group(unsigned rank) {
    unsigned n = 1u << rank;
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[a][b] = a ^ b;
    std::vector<unsigned> gens;
    for (unsigned i = 0; i < rank; ++i) gens.push_back(1u << i);
    return std::make_shared<SmallGroup>(std::move(table), std::move(gens));
}

}  // namespace spinor
