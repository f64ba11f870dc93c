#pragma once

#include <stdexcept>
#include <string>

namespace ctilde {

// Malformed arguments: bad generator index, unreduced word where a reduced one
// is required, out-of-range normal-form parameters, graph mismatch.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain (e.g. a non fully
// commutative element handed to the classifier).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Enumeration exceeded the configured element cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed. Never expected to fire; the oracle tests
// exist to catch it.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A certified lemma failed its bounded-length check.
class LemmaViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ctilde
