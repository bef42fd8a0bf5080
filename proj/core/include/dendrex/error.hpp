#pragma once

#include <stdexcept>
#include <string>

namespace dendrex {

// Input violates a structural invariant (duplicate edge names, malformed shape).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called outside its domain (e.g. inner face at a leaf).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Case deliberately left undefined, such as outer faces of single-vertex trees.
class UnsupportedCaseError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured size ceiling would be exceeded.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A self-check that must never fail did fail. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dendrex
