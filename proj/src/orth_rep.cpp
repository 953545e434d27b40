#include "spinor/orth_rep.hpp"

#include <algorithm>

namespace spinor {

Int OrthRep::char_value(unsigned g) const {
    Rat t = trace_of(g);
    if (t.get_den() != 1)
        throw InvariantViolation("non-integral character value in " + name);
    return t.get_num();
}

void validate_orth_rep(const OrthRep& rep) {
    if (!rep.group) throw InvariantViolation("representation without a group");
    unsigned n = rep.group->order();
    if (rep.matrix.size() != n) throw InvariantViolation("one matrix per element required");
    if (!is_positive_definite(rep.form))
        throw InvariantViolation("invariant form is not positive definite");
    RatMat bt = rep.form.transposed();
    if (bt != rep.form) throw InvariantViolation("invariant form is not symmetric");
    if (!rep.matrix[rep.group->identity()].is_identity())
        throw InvariantViolation("identity element must act as the identity matrix");
    for (unsigned g = 0; g < n; ++g) {
        const RatMat& m = rep.matrix[g];
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw InvariantViolation("matrix dimension mismatch");
        if (m.transposed() * rep.form * m != rep.form)
            throw InvariantViolation("element " + std::to_string(g) + " does not preserve the form");
    }
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h)
            if (rep.matrix[g] * rep.matrix[h] != rep.matrix[rep.group->mul(g, h)])
                throw InvariantViolation("not a homomorphism at pair (" + std::to_string(g) + ", " +
                                         std::to_string(h) + ")");
}

OrthRep perm_matrix_rep(GroupPtr group, const std::vector<Perm>& action, std::string name) {
    if (action.size() != group->order())
        throw InvariantViolation("one permutation per element required");
    std::size_t pts = action.front().size();
    OrthRep rep;
    rep.group = std::move(group);
    rep.dim = pts;
    rep.form = RatMat::identity(pts);
    rep.name = std::move(name);
    rep.matrix.reserve(action.size());
    for (const Perm& p : action) {
        RatMat m(pts, pts);
        for (unsigned x = 0; x < pts; ++x) m.at(p[x], x) = 1;
        rep.matrix.push_back(std::move(m));
    }
    return rep;
}

OrthRep coset_perm_rep(GroupPtr group, const std::vector<unsigned>& subgroup, std::string name) {
    if (!group->is_subgroup(subgroup))
        throw NotSubgroup("the listed elements do not form a subgroup");
    unsigned n = group->order();
    std::vector<bool> in_h(n, false);
    for (unsigned h : subgroup) in_h[h] = true;
    // enumerate left cosets gH by representative discovery order
    std::vector<long> coset_of(n, -1);
    std::vector<unsigned> reps;
    for (unsigned g = 0; g < n; ++g) {
        if (coset_of[g] >= 0) continue;
        unsigned c = static_cast<unsigned>(reps.size());
        reps.push_back(g);
        for (unsigned h : subgroup) coset_of[group->mul(g, h)] = c;
    }
    std::vector<Perm> action(n);
    for (unsigned g = 0; g < n; ++g) {
        Perm p(reps.size());
        for (unsigned c = 0; c < reps.size(); ++c)
            p[c] = static_cast<unsigned>(coset_of[group->mul(g, reps[c])]);
        action[g] = std::move(p);
    }
    return perm_matrix_rep(std::move(group), action,
                           name.empty() ? "coset_rep" : std::move(name));
}

OrthRep sign_twist(const OrthRep& rep, const std::vector<int>& chi, std::string name) {
    unsigned n = rep.group->order();
    if (chi.size() != n) throw InvariantViolation("character values for every element required");
    for (unsigned g = 0; g < n; ++g) {
        if (chi[g] != 1 && chi[g] != -1) throw InvariantViolation("sign twist needs +-1 values");
        for (unsigned h = 0; h < n; ++h)
            if (chi[g] * chi[h] != chi[rep.group->mul(g, h)])
                throw InvariantViolation("sign twist is not a homomorphism");
    }
    OrthRep out = rep;
    out.name = name.empty() ? rep.name + "*sgn" : std::move(name);
    for (unsigned g = 0; g < n; ++g) {
        if (chi[g] == 1) continue;
        for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t j = 0; j < rep.dim; ++j) out.matrix[g].at(i, j) = -out.matrix[g].at(i, j);
    }
    return out;
}

OrthRep direct_sum(const OrthRep& a, const OrthRep& b) {
    if (a.group != b.group) throw InvariantViolation("direct sum needs a shared group");
    OrthRep out;
    out.group = a.group;
    out.dim = a.dim + b.dim;
    out.name = a.name + "+" + b.name;
    out.form = RatMat(out.dim, out.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) out.form.at(i, j) = a.form.at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) out.form.at(a.dim + i, a.dim + j) = b.form.at(i, j);
    out.matrix.reserve(a.matrix.size());
    for (unsigned g = 0; g < a.group->order(); ++g) {
        RatMat m(out.dim, out.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.matrix[g].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.matrix[g].at(i, j);
        out.matrix.push_back(std::move(m));
    }
    return out;
}

OrthRep diagonal_char_rep(GroupPtr group, const std::vector<std::vector<int>>& chars,
                          std::string name) {
    unsigned n = group->order();
    std::size_t dim = chars.size();
    OrthRep rep;
    rep.group = std::move(group);
    rep.dim = dim;
    rep.form = RatMat::identity(dim);
    rep.name = std::move(name);
    rep.matrix.reserve(n);
    for (unsigned g = 0; g < n; ++g) {
        RatMat m(dim, dim);
        for (std::size_t k = 0; k < dim; ++k) {
            int v = chars[k].at(g);
            if (v != 1 && v != -1) throw InvariantViolation("diagonal characters must be +-1 valued");
            m.at(k, k) = v;
        }
        rep.matrix.push_back(std::move(m));
    }
    return rep;
}

OrthRep regular_rep(GroupPtr group, std::string name) {
    unsigned n = group->order();
    std::vector<Perm> action(n);
    for (unsigned g = 0; g < n; ++g) {
        Perm p(n);
        for (unsigned x = 0; x < n; ++x) p[x] = group->mul(g, x);
        action[g] = std::move(p);
    }
    return perm_matrix_rep(std::move(group), action, name.empty() ? "regular" : std::move(name));
}

OrthRep cyclic_perm_model(GroupPtr cyclic_n, unsigned d, std::string name) {
    unsigned n = cyclic_n->order();
    if (d == 0 || n % d != 0) throw InvariantViolation("need d | n for the Z/d permutation model");
    std::vector<Perm> action(n);
    for (unsigned k = 0; k < n; ++k) {
        Perm p(d);
        for (unsigned x = 0; x < d; ++x) p[x] = (x + k) % d;  // g^k shifts by k
        action[k] = std::move(p);
    }
    return perm_matrix_rep(std::move(cyclic_n), action,
                           name.empty() ? "perm_z" + std::to_string(d) : std::move(name));
}

std::vector<int> cyclic_sign_character(unsigned n) {
    if (n % 2 != 0) throw OddModulus("the sign character needs even order");
    std::vector<int> chi(n);
    for (unsigned k = 0; k < n; ++k) chi[k] = k % 2 == 0 ? 1 : -1;
    return chi;
}

std::vector<int> det_sign_character(const GeneratedGroup<FpMat>& g) {
    unsigned p = g.elements.front().p;
    if (p == 2) throw EvenQ("sgn of the determinant needs odd characteristic");
    // squares in F_p^x
    std::vector<bool> square(p, false);
    for (unsigned x = 1; x < p; ++x) square[(x * x) % p] = true;
    std::vector<int> chi;
    chi.reserve(g.elements.size());
    for (const FpMat& m : g.elements) {
        // determinant over F_p by elimination is overkill at n = 2, 3
        unsigned n = m.n;
        long det = 0;
        if (n == 2) {
            det = (long)m.at(0, 0) * m.at(1, 1) - (long)m.at(0, 1) * m.at(1, 0);
        } else if (n == 3) {
            det = (long)m.at(0, 0) * ((long)m.at(1, 1) * m.at(2, 2) - (long)m.at(1, 2) * m.at(2, 1)) -
                  (long)m.at(0, 1) * ((long)m.at(1, 0) * m.at(2, 2) - (long)m.at(1, 2) * m.at(2, 0)) +
                  (long)m.at(0, 2) * ((long)m.at(1, 0) * m.at(2, 1) - (long)m.at(1, 1) * m.at(2, 0));
        } else {
            throw InvariantViolation("det_sign_character supports n <= 3");
        }
        long r = det % static_cast<long>(p);
        if (r < 0) r += p;
        if (r == 0) throw InvariantViolation("singular matrix in group");
        chi.push_back(square[static_cast<unsigned>(r)] ? 1 : -1);
    }
    return chi;
}

}  // namespace spinor
