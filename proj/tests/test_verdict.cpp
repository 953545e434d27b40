#include <random>

#include <doctest.h>

#include "spinor/verdict.hpp"

using namespace spinor;

TEST_CASE("involution lift congruence") {
    CHECK(involution_lift_rule(0));
    CHECK(!involution_lift_rule(2));
    CHECK(involution_lift_rule(3));
    // the sign of the lift square is (-1)^{m(m+1)/2}
    for (unsigned m = 0; m <= 16; ++m)
        CHECK(involution_lift_rule(m) == ((m * (m + 1) / 2) % 2 == 0));
    CHECK_THROWS_AS(involution_lift_rule(-1), InvariantViolation);
}

TEST_CASE("cyclic rule") {
    CHECK(decide_cyclic(3, CharPair(5, 1)).spinorial);
    Verdict sign2 = decide_cyclic(2, CharPair(1, -1));
    CHECK(!sign2.spinorial);
    CHECK(sign2.m == 1);
    CHECK(sign2.rule == Rule::Cyclic2Mod4);
    Verdict c4 = decide_cyclic(4, CharPair(2, -2));
    CHECK(!c4.spinorial);
    CHECK(c4.m == 2);
    CHECK(c4.rule == Rule::Cyclic0Mod4);
    // m = 3 splits the two even cases
    CHECK(decide_cyclic(6, CharPair(9, 3)).spinorial);
    CHECK(!decide_cyclic(4, CharPair(9, 3)).spinorial);
}

TEST_CASE("elementary abelian rule") {
    std::map<unsigned, Int> regular = {{1, 0}, {2, 0}, {3, 0}};
    Verdict v = decide_elementary_abelian(2, regular, 4);
    CHECK(!v.spinorial);
    CHECK(v.m == 2);
    CHECK(v.failing_element == "e1");

    std::map<unsigned, Int> trivial = {{1, 3}, {2, 3}, {3, 3}};
    CHECK(decide_elementary_abelian(2, trivial, 3).spinorial);

    std::map<unsigned, Int> nontrivial_sum = {{1, -1}, {2, -1}, {3, -1}};
    CHECK(!decide_elementary_abelian(2, nontrivial_sum, 3).spinorial);

    std::map<unsigned, Int> missing = {{1, 0}, {3, 0}};
    CHECK_THROWS_AS(decide_elementary_abelian(2, missing, 4), MissingElement);
}

TEST_CASE("GL rule") {
    PrimePower q7 = parse_prime_power(7);
    Verdict st7 = decide_gl(2, q7, CharPair(7, 1));
    CHECK(st7.spinorial);
    CHECK(st7.m == 3);

    PrimePower q5 = parse_prime_power(5);
    Verdict st5 = decide_gl(2, q5, CharPair(5, 1));
    CHECK(!st5.spinorial);
    CHECK(st5.m == 2);

    CHECK_THROWS_AS(decide_gl(3, parse_prime_power(4), CharPair(2, 2)), ExceptionalCase);
    CHECK_THROWS_AS(decide_gl(2, parse_prime_power(3), CharPair(2, 2)), ExceptionalCase);
    CHECK(is_gl_exceptional(4, 2));
    CHECK(!is_gl_exceptional(4, 3));
}

TEST_CASE("even q is always spinorial") {
    std::mt19937_64 rng(7);
    for (unsigned long qv : {2ul, 4ul, 8ul, 16ul}) {
        PrimePower q = parse_prime_power(qv);
        for (int t = 0; t < 50; ++t) {
            long t1 = 1 + static_cast<long>(rng() % 400);
            long ta = t1 - 2 * static_cast<long>(rng() % (t1 + 1));
            CHECK(decide_gl(5, q, CharPair(t1, ta)).spinorial);
            CHECK(decide_gsp(3, q, CharPair(t1, ta)).spinorial);
        }
    }
}

TEST_CASE("GSp rule") {
    PrimePower q5 = parse_prime_power(5);
    CHECK(decide_gsp(2, q5, CharPair(6, 6)).spinorial);  // m = 0
    PrimePower q7 = parse_prime_power(7);
    Verdict v = decide_gsp(2, q7, CharPair(8, 0));
    CHECK(v.spinorial);
    CHECK(v.m == 4);
    CHECK(v.rule == Rule::Gsp3Mod4);
}

TEST_CASE("the GL rule is the cyclic rule for the restriction to GL_1") {
    std::mt19937_64 rng(11);
    for (unsigned long qv : {5ul, 7ul, 9ul, 11ul, 13ul, 27ul}) {
        PrimePower q = parse_prime_power(qv);
        for (int t = 0; t < 100; ++t) {
            long t1 = 1 + static_cast<long>(rng() % 500);
            long ta = t1 - 2 * static_cast<long>(rng() % (t1 + 1));
            CharPair pair(t1, ta);
            CHECK(decide_gl(5, q, pair).spinorial == decide_cyclic(qv - 1, pair).spinorial);
        }
    }
}

TEST_CASE("adding a summand with m = 0 mod 4 never changes the verdict") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        long t1 = 1 + static_cast<long>(rng() % 300);
        long ta = t1 - 2 * static_cast<long>(rng() % (t1 + 1));
        long extra_m = 4 * static_cast<long>(rng() % 20);
        long s1 = extra_m + static_cast<long>(rng() % 50);
        CharPair base(t1, ta);
        CharPair summed(t1 + s1, ta + s1 - 2 * extra_m);
        unsigned long qv = (t % 2) ? 13 : 11;
        PrimePower q = parse_prime_power(qv);
        CHECK(decide_gl(3, q, base).spinorial == decide_gl(3, q, summed).spinorial);
        CHECK(decide_cyclic(6, base).spinorial == decide_cyclic(6, summed).spinorial);
        CHECK(decide_cyclic(8, base).spinorial == decide_cyclic(8, summed).spinorial);
    }
}

TEST_CASE("exceptional cases") {
    // GL_2(F_2): single unipotent value
    ExceptionalValues triv{1, {{"u", 1}}};
    CHECK(decide_exceptional(ExceptionalGroup::Gl2F2, triv).spinorial);
    ExceptionalValues perm3{3, {{"u", 1}}};
    CHECK(!decide_exceptional(ExceptionalGroup::Gl2F2, perm3).spinorial);

    // GL_2(F_3): the permutation representation on P^1 has m = 1, m' = 0,
    // and m = 1 fails the congruence, so the representation is aspinorial
    ExceptionalValues p1{4, {{"a1", 2}, {"minus1", 4}}};
    Verdict vp1 = decide_exceptional(ExceptionalGroup::Gl2F3, p1);
    CHECK(!vp1.spinorial);
    CHECK(vp1.m == 1);
    CHECK(vp1.failing_element == "a1");

    ExceptionalValues both_ok{8, {{"a1", 2}, {"minus1", 0}}};  // m = 3, m' = 4
    CHECK(decide_exceptional(ExceptionalGroup::Gl2F3, both_ok).spinorial);

    // GL_3(F_2): conjunction over the two unipotent classes
    ExceptionalValues m1_bad{8, {{"u1", 4}, {"u2", 8}}};  // m1 = 2, m2 = 0
    CHECK(!decide_exceptional(ExceptionalGroup::Gl3F2, m1_bad).spinorial);
    ExceptionalValues m_ok{8, {{"u1", 2}, {"u2", 0}}};  // m1 = 3, m2 = 4
    CHECK(decide_exceptional(ExceptionalGroup::Gl3F2, m_ok).spinorial);

    // GL_2(F_4) and GL_4(F_2): theta difference mod 8
    ExceptionalValues diff4{5, {{"(12)(34)", 1}}};
    CHECK(!decide_exceptional(ExceptionalGroup::Gl2F4, diff4).spinorial);
    ExceptionalValues diff8{9, {{"(12)(34)", 1}}};
    CHECK(decide_exceptional(ExceptionalGroup::Gl4F2, diff8).spinorial);

    CHECK_THROWS_AS(decide_exceptional(ExceptionalGroup::Gl3F4, triv), Gl3F4Unsupported);
    ExceptionalValues wrong_names{4, {{"x", 2}}};
    CHECK_THROWS_AS(decide_exceptional(ExceptionalGroup::Gl2F3, wrong_names), MissingElement);
}
