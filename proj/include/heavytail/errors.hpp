#pragma once

#include <stdexcept>
#include <string>

namespace heavytail {

// Precondition violations: bad arguments, mismatched provenance, malformed specs.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bound or decomposition was requested outside its tail-exponent regime.
class WrongRegime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The (mu, M, x) split degenerates (M >= x) or mu >= 1.
class InvalidSchedule : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested scale exceeds what double precision supports (mu*x > 700).
class UnsupportedScale : public std::range_error {
public:
    using std::range_error::range_error;
};

} // namespace heavytail
