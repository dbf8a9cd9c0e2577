#pragma once

#include <stdexcept>
#include <string>

namespace wb {

/// Base of every error raised by the workbench core.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown parameter, generator or entry; malformed definition.
class DefinitionError : public Error {
public:
    using Error::Error;
};

/// Operands that do not fit together (different bases, wrong degree).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input outside what an operation supports (non-nilpotent ad, odd 2-cochains, ...).
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

/// A computed object violates a structural expectation (non-Lie first order of R, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

} // namespace wb
