#pragma once

#include <stdexcept>
#include <string>

namespace sftcross {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input: parse failures, invalid matrices,
// mixed-matrix operands, violated operation preconditions.
struct InputError : Error {
    using Error::Error;
};

// Value outside the mathematical domain of an operation (square root of a
// negative rational, sign of a non-real scalar, inverse of zero).
struct DomainError : Error {
    using Error::Error;
};

// The operation is well posed but intentionally outside what this tool
// computes (multi-term scalar inverses, groupoid models with non-constant
// preimage counts, oversized radicands).
struct UnsupportedError : Error {
    using Error::Error;
};

// A requested oracle cannot give a trustworthy answer for these inputs.
struct OracleUnavailableError : Error {
    using Error::Error;
};

// A bounded search ran out of budget before finding a certificate.
struct SearchFailureError : Error {
    using Error::Error;
};

}  // namespace sftcross
