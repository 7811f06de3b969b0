#ifndef JANUS_ERRORS_HPP
#define JANUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace janus {

// Every failure that a caller can act on derives from janus::Error so the CLI
// can map it to exit code 1 in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (|z| >= 1, k < 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The normalization constraint has no real non-negative chi for the request.
class NoRealAmplitude : public Error {
public:
    using Error::Error;
};

// Mean photon number vanishes, so g^(k) is undefined.
class DegenerateState : public Error {
public:
    using Error::Error;
};

class CutoffTooSmall : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

class SweepDegenerate : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

} // namespace janus

#endif // JANUS_ERRORS_HPP
