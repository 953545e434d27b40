#pragma once

#include <string>
#include <utility>

#include "spinor/errors.hpp"
#include "spinor/numeric.hpp"

namespace spinor {

/// The pair (Theta_pi(1), Theta_pi(a_1)) of integer character values: the
/// dimension and the trace at the decisive involution. This is the sole
/// input to the congruence rules; m = (theta_1 - theta_a1)/2 is the
/// multiplicity of the eigenvalue -1 of pi(a_1).
struct CharPair {
    Int theta_1;
    Int theta_a1;
    std::string label;

    CharPair(Int t1, Int ta1, std::string label_ = {})
        : theta_1(std::move(t1)), theta_a1(std::move(ta1)), label(std::move(label_)) {
        if (theta_1 < 1)
            throw InvariantViolation("CharPair: theta_1 must be >= 1, got " + to_decimal(theta_1));
        if ((theta_1 - theta_a1) % 2 != 0)
            throw InvariantViolation("CharPair: theta_1 and theta_a1 must have equal parity (" +
                                     to_decimal(theta_1) + ", " + to_decimal(theta_a1) + ")");
        if (abs(theta_a1) > theta_1)
            throw InvariantViolation("CharPair: |theta_a1| must be <= theta_1 (" +
                                     to_decimal(theta_1) + ", " + to_decimal(theta_a1) + ")");
    }

    Int m() const { return (theta_1 - theta_a1) / 2; }
};

}  // namespace spinor
