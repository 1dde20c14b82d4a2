#pragma once

#include <stdexcept>
#include <string>

namespace arboreal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition on the mathematical input does not hold.
struct DomainError : Error {
    using Error::Error;
};

// A size or height guard was hit.
struct GuardExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Res(P,Q) = 0, repeated critical point, or a map that cannot be normalized.
struct DegenerateMap : Error {
    using Error::Error;
};

// Cross ratio of the form 0/0.
struct Indeterminate : Error {
    using Error::Error;
};

// An identity that must hold by construction failed.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace arboreal
