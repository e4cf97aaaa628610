#pragma once

#include <stdexcept>
#include <string>

namespace divbound {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (negative divergence,
// TV outside [0, 2], support size below 2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A measure failed its construction invariants.
class InvalidMeasure : public Error {
public:
    using Error::Error;
};

// mu has positive mass on an atom where nu vanishes.
class AbsoluteContinuityViolation : public Error {
public:
    explicit AbsoluteContinuityViolation(std::string atom)
        : Error("absolute continuity violated at atom '" + atom +
                "': mu > 0 where nu = 0"),
          atom_(std::move(atom)) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

class UnknownGenerator : public Error {
public:
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator '" + name + "' (expected one of HE, TV, KL, PE, SH)") {}
};

class NonMonotoneGenerator : public Error {
public:
    explicit NonMonotoneGenerator(const std::string& name)
        : Error("bound function of generator '" + name +
                "' is not nondecreasing on [0, 1]; cannot invert") {}
};

// Malformed measure file or numeric literal.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace divbound
