#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text, non-bijective one-line notation, bad token.
class ParseError : public Error {
public:
    using Error::Error;
};

// A code entry violates 0 <= c(i) < i.
class InvalidCode : public Error {
public:
    using Error::Error;
};

// Precondition violation on an otherwise well-formed value (k < 1, position out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace permstat
