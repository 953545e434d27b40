#include <doctest.h>

#include "spinor/group.hpp"
#include "spinor/orth_rep.hpp"
#include "spinor/registry.hpp"

using namespace spinor;

TEST_CASE("permutation closure") {
    Perm cycle = {1, 2, 0};
    Perm swap = {1, 0, 2};
    auto s3 = perm_group_closure({cycle, swap});
    CHECK(s3.group->order() == 6);
    CHECK(s3.group->identity() == 0);
    CHECK(s3.group->element_order(s3.group->generators()[0]) == 3);
    CHECK(s3.group->element_order(s3.group->generators()[1]) == 2);

    auto trivial = perm_group_closure({perm_identity(4)});
    CHECK(trivial.group->order() == 1);

    CHECK_THROWS_AS(perm_group_closure({cycle, swap}, 5), OrderBound);
}

TEST_CASE("matrix closures over F_p") {
    FpMat u = FpMat::from_rows(3, {{1, 1}, {0, 1}});
    FpMat w = FpMat::from_rows(3, {{0, 1}, {2, 0}});
    // u, w both have determinant 1: they generate SL_2(F_3) only
    CHECK(fpmat_group_closure({u, w}).group->order() == 24);
    FpMat d = FpMat::from_rows(3, {{1, 0}, {0, 2}});
    CHECK(fpmat_group_closure({u, w, d}).group->order() == 48);
    CHECK(gl2f2_model().g.group->order() == 6);
    CHECK(gl2f3_model().g.group->order() == 48);
}

TEST_CASE("rational matrix closure") {
    RatMat swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    RatMat minus = RatMat::identity(2);
    minus.at(0, 0) = -1;
    auto g = ratmat_group_closure({swap, minus});
    CHECK(g.group->order() == 8);  // signed permutations of rank 2 up to ... the dihedral group
    CHECK(g.find(RatMat::identity(2)) == 0);
}

TEST_CASE("coset permutation representations") {
    const Gl2F3Model& m = gl2f3_model();
    OrthRep borel = coset_perm_rep(m.g.group, m.borel);
    CHECK(borel.dim == 4);
    validate_orth_rep(borel);

    std::vector<unsigned> everything(m.g.group->order());
    for (unsigned i = 0; i < everything.size(); ++i) everything[i] = i;
    CHECK(coset_perm_rep(m.g.group, everything).dim == 1);

    GroupPtr c4 = cyclic_group(4);
    OrthRep reg = coset_perm_rep(c4, {0});
    CHECK(reg.dim == 4);
    validate_orth_rep(reg);

    CHECK_THROWS_AS(coset_perm_rep(c4, {0, 1}), NotSubgroup);  // 1 has order 4
}

TEST_CASE("representation validation catches corruption") {
    OrthRep rep = regular_rep(cyclic_group(3));
    validate_orth_rep(rep);

    OrthRep broken = rep;
    broken.matrix[1].at(0, 0) = 7;  // no longer orthogonal or a homomorphism
    CHECK_THROWS_AS(validate_orth_rep(broken), InvariantViolation);

    OrthRep bad_form = rep;
    bad_form.form.at(0, 0) = -1;  // not positive definite
    CHECK_THROWS_AS(validate_orth_rep(bad_form), InvariantViolation);
}

TEST_CASE("sign twists must be quadratic characters") {
    GroupPtr c4 = cyclic_group(4);
    OrthRep reg = regular_rep(c4);
    OrthRep twisted = sign_twist(reg, cyclic_sign_character(4));
    validate_orth_rep(twisted);
    CHECK(twisted.char_value(1) == -reg.char_value(1));

    std::vector<int> not_hom = {1, -1, 1, 1};
    CHECK_THROWS_AS(sign_twist(reg, not_hom), InvariantViolation);
}

TEST_CASE("cyclic permutation models") {
    GroupPtr c6 = cyclic_group(6);
    OrthRep p3 = cyclic_perm_model(c6, 3);
    CHECK(p3.dim == 3);
    validate_orth_rep(p3);
    CHECK(p3.char_value(3) == 3);  // g^3 acts trivially on Z/3
    CHECK(p3.char_value(1) == 0);
    CHECK_THROWS_AS(cyclic_perm_model(c6, 4), InvariantViolation);
    CHECK_THROWS_AS(cyclic_sign_character(5), OddModulus);
}

TEST_CASE("determinant sign character of GL_2(F_3)") {
    const Gl2F3Model& m = gl2f3_model();
    std::vector<int> chi = det_sign_character(m.g);
    CHECK(chi[m.g.group->identity()] == 1);
    CHECK(chi[m.a1_id] == -1);       // det = -1 = 2, a non-square mod 3
    CHECK(chi[m.minus_one_id] == 1); // det = 1
    for (unsigned g = 0; g < m.g.group->order(); ++g)
        for (unsigned h = 0; h < m.g.group->order(); ++h)
            CHECK(chi[g] * chi[h] == chi[m.g.group->mul(g, h)]);
}
