#include <complex>

#include <doctest.h>

#include "spinor/chars.hpp"

using namespace spinor;

TEST_CASE("prime power parsing") {
    PrimePower q9 = parse_prime_power(9);
    CHECK(q9.p == 3);
    CHECK(q9.r == 2);
    PrimePower q2 = parse_prime_power(2);
    CHECK(q2.p == 2);
    CHECK(q2.r == 1);
    CHECK(parse_prime_power(3125).p == 5);
    CHECK_THROWS_AS(parse_prime_power(12), NotAPrimePower);
    CHECK_THROWS_AS(parse_prime_power(6), NotAPrimePower);
    CHECK_THROWS_AS(parse_prime_power(1), NotAPrimePower);
    CHECK(parse_prime_power(9).mod4() == 1);
    CHECK(parse_prime_power(7).mod4() == 3);
    CHECK(parse_prime_power(8).is_even());
}

namespace {

// independent root-of-unity oracle for chi(-1): evaluate omega^{index * m/2}
// numerically and read off the sign
int root_of_unity_sign(unsigned long modulus, unsigned long index) {
    const double pi = 3.14159265358979323846;
    std::complex<double> z =
        std::polar(1.0, 2.0 * pi * double(index) * double(modulus / 2) / double(modulus));
    REQUIRE(std::abs(z.imag()) < 1e-9);
    return z.real() > 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("character value at -1") {
    CHECK(eval_at_minus_one(LinearChar(6, 3)) == -1);  // matches zeta_6^{3*3} = -1
    CHECK(eval_at_minus_one(LinearChar(6, 0)) == 1);
    CHECK(eval_at_minus_one(LinearChar(4, 2)) == 1);  // sgn of F_5^x is even
    CHECK_THROWS_AS(eval_at_minus_one(LinearChar(5, 2)), OddModulus);

    for (unsigned long m = 2; m <= 40; m += 2)
        for (unsigned long i = 0; i < m; ++i)
            CHECK(eval_at_minus_one(LinearChar(m, i)) == root_of_unity_sign(m, i));
}

TEST_CASE("chi(-1) chi^{-1}(-1) = 1") {
    for (unsigned long m = 2; m <= 30; m += 2)
        for (unsigned long i = 0; i < m; ++i) {
            LinearChar chi(m, i);
            CHECK(eval_at_minus_one(chi) * eval_at_minus_one(chi.inverse()) == 1);
        }
}

TEST_CASE("quadratic characters") {
    CHECK(LinearChar::trivial(6).is_quadratic());
    CHECK(LinearChar::sgn(6).is_quadratic());
    CHECK(LinearChar::sgn(6).index == 3);
    CHECK(!LinearChar(6, 1).is_quadratic());
    CHECK_THROWS_AS(LinearChar::sgn(5), OddModulus);
    CHECK(LinearChar::from_exponent(6, -1).index == 5);
}

TEST_CASE("regularity of characters of F_{q^2}") {
    PrimePower q3 = parse_prime_power(3);
    CHECK(is_regular(RegularChar{q3, 1}));
    CHECK(!is_regular(RegularChar{q3, 4}));  // 4 = (q+1), Galois-fixed
    CHECK(!is_regular(RegularChar{q3, 0}));
}

TEST_CASE("orthogonality of cuspidal parameters") {
    PrimePower q3 = parse_prime_power(3);
    PrimePower q5 = parse_prime_power(5);
    CHECK(is_orthogonal_theta(RegularChar{q3, 2}));
    CHECK(!is_orthogonal_theta(RegularChar{q3, 1}));
    CHECK(is_orthogonal_theta(RegularChar{q5, 4}));
    CHECK_THROWS_AS(is_orthogonal_theta(RegularChar{q3, 0}), NotRegular);
}

TEST_CASE("orthogonality is Galois-orbit stable") {
    for (unsigned long qv : {3ul, 5ul, 7ul, 9ul}) {
        PrimePower q = parse_prime_power(qv);
        for (unsigned long i = 1; i < qv * qv - 1; ++i) {
            RegularChar theta{q, i};
            if (!is_regular(theta)) continue;
            CHECK(is_orthogonal_theta(theta) == is_orthogonal_theta(theta.galois()));
        }
    }
}

TEST_CASE("tau-orbit count of regular orthogonal theta is (q-1)/2") {
    for (unsigned long qv : {3ul, 5ul, 7ul, 9ul, 11ul}) {
        PrimePower q = parse_prime_power(qv);
        unsigned long orbits = 0;
        for (unsigned long i = 1; i < qv * qv - 1; ++i) {
            RegularChar theta{q, i};
            if (!is_regular(theta) || !is_orthogonal_theta(theta)) continue;
            if (i <= theta.galois().index) ++orbits;
        }
        CHECK(orbits == (qv - 1) / 2);
    }
}

TEST_CASE("q-factorial") {
    CHECK(q_factorial(3, parse_prime_power(3)) == 52);
    CHECK(q_factorial(1, parse_prime_power(7)) == 1);
    CHECK(q_factorial(4, parse_prime_power(3)) == 2080);
    for (unsigned long qv : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul, 25ul, 27ul})
        for (unsigned n = 4; n <= 8; ++n)
            CHECK(q_factorial(n, parse_prime_power(qv)) % 8 == 0);
}

TEST_CASE("psi products") {
    CHECK(psi(2, parse_prime_power(3)) == 16);
    CHECK(psi(0, parse_prime_power(5)) == 1);
    CHECK(psi(2, parse_prime_power(5)) == 96);
    for (unsigned long qv = 3; qv <= 49; qv += 2) {
        PrimePower q;
        try {
            q = parse_prime_power(qv);
        } catch (const NotAPrimePower&) {
            continue;
        }
        for (unsigned m = 2; m <= 6; ++m) CHECK(psi(m, q) % 8 == 0);
    }
}
