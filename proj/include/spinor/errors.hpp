#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAPrimePower : Error { using Error::Error; };
struct OddModulus : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct EvenQ : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct MixedModulus : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct BadRank : Error { using Error::Error; };
struct ExceptionalCase : Error { using Error::Error; };
struct Gl3F4Unsupported : Error { using Error::Error; };
struct MissingElement : Error { using Error::Error; };
struct OrderBound : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonScalarDefect : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

}  // namespace spinor
