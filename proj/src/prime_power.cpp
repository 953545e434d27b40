#include "spinor/prime_power.hpp"

#include <string>

namespace spinor {

PrimePower parse_prime_power(unsigned long q) {
    if (q < 2) throw NotAPrimePower(std::to_string(q) + " is not a prime power (need q >= 2)");
    unsigned long n = q;
    unsigned long p = 0;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = n;  // q itself is prime
    unsigned r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    if (n != 1)
        throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    return PrimePower{q, p, r};
}

}  // namespace spinor
