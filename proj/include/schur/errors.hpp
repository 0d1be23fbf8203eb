#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value violates one of its type invariants. The message starts with
// "invariant: " followed by the name of the violated invariant.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& invariant)
        : Error("invariant: " + invariant) {}
};

// Two Gelfand-Tsetlin patterns are not joined by an edge of the
// Schur-Weyl-Young graph.
class NotAnEdge : public Error {
public:
    using Error::Error;
};

class WrongDimension : public Error {
public:
    using Error::Error;
};

// Louck and Pattern-Rule amplitudes differ on an edge (both-verify engine).
class AmplitudeMismatch : public Error {
public:
    using Error::Error;
};

class SizeBoundExceeded : public Error {
public:
    using Error::Error;
};

// Input text (JSON, words, amplitudes) does not have the expected shape.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace schur
