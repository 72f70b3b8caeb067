#ifndef LOWPROB_ERROR_HPP
#define LOWPROB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lowprob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: space mismatch, bad masses, bad labels.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition does not hold (e.g. an undominated set
/// function passed where a lower envelope is required).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured enumeration or size cap.
class UnsupportedSize : public Error {
public:
    using Error::Error;
};

/// A polyhedral family of joint measures turned out to be empty.
class EmptyFamily : public Error {
public:
    using Error::Error;
};

} // namespace lowprob

#endif
