#pragma once

#include <stdexcept>
#include <string>

namespace comprelie {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct LetterOutOfRange : Error {
    using Error::Error;
};

// 1 < 1 for the half-shuffle is not defined.
struct Undefined11 : Error {
    using Error::Error;
};

// Argument has a nonzero unit component where an augmentation-ideal
// element is required.
struct NotAugmentation : Error {
    using Error::Error;
};

// The g'(lambda, mu) product is not degree-graded.
struct NotGraded : Error {
    using Error::Error;
};

struct IndexBeyondPrefix : Error {
    using Error::Error;
};

struct MissingHalfShuffle : Error {
    using Error::Error;
};

struct WrongFamily : Error {
    using Error::Error;
};

// Structure-constant table failed the preLie identity.
struct NotPreLie : Error {
    NotPreLie(const std::string& msg, int i, int j, int k)
        : Error(msg), a(i), b(j), c(k) {}
    int a, b, c;
};

// Bad scalar or family parameter (a = 0, mu = 0, negative-integer b, ...).
struct InvalidParam : Error {
    using Error::Error;
};

struct NonPrimitiveImage : Error {
    using Error::Error;
};

struct PreconditionFA : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t at) : Error(msg), offset(at) {}
    std::size_t offset;
};

} // namespace comprelie
