#pragma once
#include <stdexcept>
#include <string>

namespace charvar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed input data: duplicate vertices, non-subcomplexes, broken manifolds. */
struct ValidationError : Error {
    using Error::Error;
};

/* A requested simplex/vertex is absent from the complex. */
struct NotFoundError : Error {
    using Error::Error;
};

/* An operation needs its subcomplex full (every simplex spanned by subcomplex
   vertices already belongs to it) and it is not. */
struct FullnessRequired : Error {
    using Error::Error;
};

struct NotConnectedError : Error {
    using Error::Error;
};

/* The complement of the obstacle subcomplex fails to be dense where needed. */
struct DensityViolated : Error {
    using Error::Error;
};

/* A star complement that has to be path-connected is not. */
struct LocalConnectivityViolated : Error {
    using Error::Error;
};

/* Numeric input outside the range a closed form is valid for. */
struct DomainError : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/* A should-never-happen internal invariant broke. */
struct InternalError : Error {
    using Error::Error;
};

} // namespace charvar
