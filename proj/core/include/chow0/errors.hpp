#ifndef CHOW0_ERRORS_HPP
#define CHOW0_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chow0 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division left a remainder. At every call site in this library a
// remainder indicates an upstream algebra bug, never a recoverable state.
struct NotDivisibleError : Error {
    using Error::Error;
};

// Constant term of a series is not a unit in the coefficient ring.
struct NotInvertibleError : Error {
    using Error::Error;
};

// A polynomial expected to be symmetric under l1 <-> l2 is not.
struct NotSymmetricError : Error {
    using Error::Error;
};

// Even map degree d rejected; the H -> (d+1)/2 c1 substitution and the
// generating functions are only integral for odd d.
struct EvenDegreeError : Error {
    using Error::Error;
};

// A computed quantity disagrees with a pinned closed-form identity.
struct IdentityViolatedError : Error {
    using Error::Error;
};

struct NotHomogeneousError : Error {
    using Error::Error;
};

// Q -> Z coefficient demotion hit a non-trivial denominator.
struct DemotionError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Envelope index out of range (i > d and friends).
struct IndexError : Error {
    using Error::Error;
};

} // namespace chow0

#endif
