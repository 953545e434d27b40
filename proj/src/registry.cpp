#include "spinor/registry.hpp"

#include <bit>
#include <map>

#include "spinor/char_pair.hpp"
#include "spinor/errors.hpp"

namespace spinor {

const Gl2F2Model& gl2f2_model() {
    static const Gl2F2Model model = [] {
        FpMat u = FpMat::from_rows(2, {{1, 1}, {0, 1}});
        FpMat w = FpMat::from_rows(2, {{1, 1}, {1, 0}});  // order 3
        Gl2F2Model m{fpmat_group_closure({u, w}), 0};
        if (m.g.group->order() != 6) throw InvariantViolation("GL2(F2) closure has wrong order");
        long id = m.g.find(u);
        if (id < 0) throw InvariantViolation("unipotent not found in GL2(F2)");
        m.unipotent_id = static_cast<unsigned>(id);
        return m;
    }();
    return model;
}

const Gl2F3Model& gl2f3_model() {
    static const Gl2F3Model model = [] {
        FpMat u = FpMat::from_rows(3, {{1, 1}, {0, 1}});
        FpMat w = FpMat::from_rows(3, {{0, 1}, {2, 0}});
        // u and w both have determinant 1 and only generate SL_2(F_3);
        // a determinant-2 diagonal completes the group
        FpMat d = FpMat::from_rows(3, {{1, 0}, {0, 2}});
        Gl2F3Model m{fpmat_group_closure({u, w, d}), 0, 0, {}};
        if (m.g.group->order() != 48) throw InvariantViolation("GL2(F3) closure has wrong order");
        long a1 = m.g.find(FpMat::from_rows(3, {{2, 0}, {0, 1}}));
        long mi = m.g.find(FpMat::from_rows(3, {{2, 0}, {0, 2}}));
        if (a1 < 0 || mi < 0) throw InvariantViolation("decisive involutions not found in GL2(F3)");
        m.a1_id = static_cast<unsigned>(a1);
        m.minus_one_id = static_cast<unsigned>(mi);
        for (unsigned g = 0; g < m.g.group->order(); ++g)
            if (m.g.elements[g].at(1, 0) == 0) m.borel.push_back(g);
        return m;
    }();
    return model;
}

namespace {

/// Permutation action of a matrix group over F_p on the nonzero vectors of
/// F_p^2, in a fixed point order.
std::vector<Perm> nonzero_vector_action(const GeneratedGroup<FpMat>& g) {
    unsigned p = g.elements.front().p;
    std::vector<std::pair<unsigned, unsigned>> pts;
    for (unsigned x = 0; x < p; ++x)
        for (unsigned y = 0; y < p; ++y)
            if (x || y) pts.emplace_back(x, y);
    auto index_of = [&](unsigned x, unsigned y) -> unsigned {
        for (unsigned i = 0; i < pts.size(); ++i)
            if (pts[i] == std::make_pair(x, y)) return i;
        throw InvariantViolation("vector lookup failed");
    };
    std::vector<Perm> action;
    action.reserve(g.group->order());
    for (const FpMat& mat : g.elements) {
        Perm perm(pts.size());
        for (unsigned i = 0; i < pts.size(); ++i) {
            unsigned x = (mat.at(0, 0) * pts[i].first + mat.at(0, 1) * pts[i].second) % p;
            unsigned y = (mat.at(1, 0) * pts[i].first + mat.at(1, 1) * pts[i].second) % p;
            perm[i] = index_of(x, y);
        }
        action.push_back(std::move(perm));
    }
    return action;
}

int perm_parity(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int parity = 1;
    for (unsigned i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) parity = -parity;
    }
    return parity;
}

}  // namespace

OrthRep gl2f3_vector_rep() {
    const Gl2F3Model& m = gl2f3_model();
    return perm_matrix_rep(m.g.group, nonzero_vector_action(m.g), "gl2f3-vectors");
}

Verdict cyclic_rule_verdict(const OrthRep& rep, unsigned n) {
    Int dim(static_cast<unsigned long>(rep.dim));
    if (n % 2 == 1) return decide_cyclic(n, CharPair(dim, dim, rep.name));
    unsigned invol = rep.group->power(1, n / 2);  // element 1 generates the cyclic model
    return decide_cyclic(n, CharPair(dim, rep.char_value(invol), rep.name));
}

Verdict elementary_rule_verdict(const OrthRep& rep, unsigned rank) {
    std::map<unsigned, Int> values;
    for (unsigned e = 1; e < (1u << rank); ++e) values[e] = rep.char_value(e);
    return decide_elementary_abelian(rank, values, Int(static_cast<unsigned long>(rep.dim)));
}

Verdict gl2f2_rule_verdict(const OrthRep& rep) {
    ExceptionalValues v;
    v.theta_1 = Int(static_cast<unsigned long>(rep.dim));
    v.theta["u"] = rep.char_value(gl2f2_model().unipotent_id);
    return decide_exceptional(ExceptionalGroup::Gl2F2, v);
}

Verdict gl2f3_rule_verdict(const OrthRep& rep) {
    const Gl2F3Model& m = gl2f3_model();
    ExceptionalValues v;
    v.theta_1 = Int(static_cast<unsigned long>(rep.dim));
    v.theta["a1"] = rep.char_value(m.a1_id);
    v.theta["minus1"] = rep.char_value(m.minus_one_id);
    return decide_exceptional(ExceptionalGroup::Gl2F3, v);
}

namespace {

OrthRep s3_perm3_rep() {
    const Gl2F2Model& m = gl2f2_model();
    return perm_matrix_rep(m.g.group, nonzero_vector_action(m.g), "s3-perm3");
}

/// The sign character of S_3, read off as permutation parity of the
/// 3-point action.
std::vector<int> s3_sign_character() {
    std::vector<int> chi;
    for (const Perm& p : nonzero_vector_action(gl2f2_model().g)) chi.push_back(perm_parity(p));
    return chi;
}

std::vector<CuratedRep> make_registry() {
    std::vector<CuratedRep> reps;

    for (unsigned n = 2; n <= 12; ++n) {
        reps.push_back({"c" + std::to_string(n) + "-regular",
                        "regular representation of C_" + std::to_string(n),
                        "cyclic", "regular",
                        [n] { return regular_rep(cyclic_group(n), "c" + std::to_string(n) + "-regular"); },
                        [n](const OrthRep& r) { return cyclic_rule_verdict(r, n); }});
        if (n % 2 == 0) {
            reps.push_back({"c" + std::to_string(n) + "-sign",
                            "sign character of C_" + std::to_string(n),
                            "cyclic", "sign",
                            [n] {
                                return diagonal_char_rep(cyclic_group(n), {cyclic_sign_character(n)},
                                                         "c" + std::to_string(n) + "-sign");
                            },
                            [n](const OrthRep& r) { return cyclic_rule_verdict(r, n); }});
        }
    }

    reps.push_back({"klein-regular", "regular representation of C_2 x C_2", "elem2", "regular",
                    [] { return regular_rep(elementary_abelian_group(2), "klein-regular"); },
                    [](const OrthRep& r) { return elementary_rule_verdict(r, 2); }});
    reps.push_back({"klein-chars", "sum of the three nontrivial characters of C_2 x C_2",
                    "elem2", "characters",
                    [] {
                        GroupPtr g = elementary_abelian_group(2);
                        std::vector<std::vector<int>> chars;
                        for (unsigned c = 1; c < 4; ++c) {
                            std::vector<int> chi(4);
                            for (unsigned e = 0; e < 4; ++e)
                                chi[e] = std::popcount(c & e) % 2 ? -1 : 1;
                            chars.push_back(std::move(chi));
                        }
                        return diagonal_char_rep(std::move(g), chars, "klein-chars");
                    },
                    [](const OrthRep& r) { return elementary_rule_verdict(r, 2); }});
    reps.push_back({"e8-regular", "regular representation of C_2^3", "elem2", "regular",
                    [] { return regular_rep(elementary_abelian_group(3), "e8-regular"); },
                    [](const OrthRep& r) { return elementary_rule_verdict(r, 3); }});

    reps.push_back({"s3-perm3", "GL_2(F_2) = S_3 on the three nonzero vectors", "gl2f2", "perm3",
                    s3_perm3_rep, gl2f2_rule_verdict});
    reps.push_back({"s3-perm3-sgn", "3-point model twisted by the sign character", "gl2f2",
                    "perm3*sgn",
                    [] { return sign_twist(s3_perm3_rep(), s3_sign_character(), "s3-perm3-sgn"); },
                    gl2f2_rule_verdict});
    reps.push_back({"s3-perm6", "regular representation of GL_2(F_2) = S_3", "gl2f2", "perm6",
                    [] { return regular_rep(gl2f2_model().g.group, "s3-perm6"); },
                    gl2f2_rule_verdict});
    reps.push_back({"s3-perm6-sgn", "regular representation twisted by the sign character",
                    "gl2f2", "perm6*sgn",
                    [] {
                        return sign_twist(regular_rep(gl2f2_model().g.group, "s3-perm6"),
                                          s3_sign_character(), "s3-perm6-sgn");
                    },
                    gl2f2_rule_verdict});

    reps.push_back({"gl2f3-borel", "GL_2(F_3) on the four Borel cosets (P^1)", "gl2f3", "borel",
                    [] {
                        const Gl2F3Model& m = gl2f3_model();
                        return coset_perm_rep(m.g.group, m.borel, "gl2f3-borel");
                    },
                    gl2f3_rule_verdict});
    reps.push_back({"gl2f3-borel-sgn", "Borel coset action twisted by sgn(det)", "gl2f3",
                    "borel*sgn",
                    [] {
                        const Gl2F3Model& m = gl2f3_model();
                        return sign_twist(coset_perm_rep(m.g.group, m.borel, "gl2f3-borel"),
                                          det_sign_character(m.g), "gl2f3-borel-sgn");
                    },
                    gl2f3_rule_verdict});
    reps.push_back({"gl2f3-vectors", "GL_2(F_3) on the eight nonzero vectors", "gl2f3", "vectors",
                    gl2f3_vector_rep, gl2f3_rule_verdict});
    reps.push_back({"gl2f3-vectors-sgn", "nonzero-vector action twisted by sgn(det)", "gl2f3",
                    "vectors*sgn",
                    [] {
                        return sign_twist(gl2f3_vector_rep(), det_sign_character(gl2f3_model().g),
                                          "gl2f3-vectors-sgn");
                    },
                    gl2f3_rule_verdict});

    return reps;
}

}  // namespace

const std::vector<CuratedRep>& curated_reps() {
    static const std::vector<CuratedRep> registry = make_registry();
    return registry;
}

const CuratedRep* find_curated(const std::string& name) {
    for (const CuratedRep& r : curated_reps())
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace spinor
