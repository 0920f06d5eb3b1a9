#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// Bad constructor arguments (zero denominator, s < 2, malformed column).
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller passed an out-of-contract parameter (e.g. truncation depth too small).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematical domain violations: digit outside the alphabet, x outside the
// representable range, and similar.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RangeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Invariant broken inside the engine; indicates a bug or a degenerate system.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qrep

namespace qrep {

// Malformed or semantically invalid system-spec document.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qrep
