#include "spinor/chars.hpp"

#include <string>

namespace spinor {

LinearChar::LinearChar(unsigned long modulus_, unsigned long index_)
    : modulus(modulus_), index(index_) {
    if (modulus == 0) throw InvariantViolation("character modulus must be positive");
    if (index >= modulus) throw InvariantViolation("character index out of range");
}

LinearChar LinearChar::from_exponent(unsigned long modulus, long long e) {
    if (modulus == 0) throw InvariantViolation("character modulus must be positive");
    long long m = static_cast<long long>(modulus);
    long long r = e % m;
    if (r < 0) r += m;
    return {modulus, static_cast<unsigned long>(r)};
}

LinearChar LinearChar::sgn(unsigned long modulus) {
    if (modulus % 2 != 0)
        throw OddModulus("sgn needs a cyclic group of even order, got " + std::to_string(modulus));
    return {modulus, modulus / 2};
}

int eval_at_minus_one(const LinearChar& chi) {
    if (chi.modulus % 2 != 0)
        throw OddModulus("chi(-1) undefined: modulus " + std::to_string(chi.modulus) +
                         " is odd, so -1 = 1 in the group");
    return chi.index % 2 == 0 ? 1 : -1;
}

bool is_regular(const RegularChar& theta) {
    return theta.index % (theta.q.q + 1) != 0;
}

bool is_orthogonal_theta(const RegularChar& theta) {
    if (!is_regular(theta))
        throw NotRegular("theta with index " + std::to_string(theta.index) +
                         " is Galois-fixed (q = " + std::to_string(theta.q.q) + ")");
    return (unsigned __int128)theta.index * (theta.q.q + 1) % theta.modulus() == 0;
}

Int q_factorial(unsigned n, const PrimePower& q) {
    Int result = 1;
    Int qpow = q.q;  // q^i
    for (unsigned i = 2; i <= n; ++i) {
        qpow *= q.q;
        result *= (qpow - 1) / (Int(q.q) - 1);
    }
    return result;
}

Int psi(unsigned m, const PrimePower& q) {
    Int result = 1;
    Int qpow = 1;
    for (unsigned i = 1; i <= m; ++i) {
        qpow *= q.q;
        result *= qpow - 1;
    }
    return result;
}

}  // namespace spinor
