#pragma once

#include <stdexcept>
#include <string>

namespace eqtft {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a structural axiom. The message names the axiom and a witness.
class InvalidInput : public Error {
public:
    InvalidInput(const std::string& axiom, const std::string& witness)
        : Error(axiom + ": " + witness), axiom_(axiom), witness_(witness) {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic left the representable range.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace eqtft
