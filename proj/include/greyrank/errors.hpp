#ifndef GREYRANK_ERRORS_HPP
#define GREYRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace greyrank {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad inputs: broken invariants, schema violations, out-of-range parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Degenerate data or a computation that cannot proceed (non-convergence,
// infeasible internal LP, zero spread where a divisor is needed).
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem and parsing-transport failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace greyrank

#endif
