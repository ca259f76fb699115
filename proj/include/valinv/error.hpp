#pragma once

#include <stdexcept>
#include <string>

namespace valinv {

enum class ErrorKind {
    domain,          // argument outside the mathematical domain
    range,           // integration bounds outside a curve's domain
    accuracy,        // numerical budget exhausted before reaching tolerance
    invariant,       // a data-model invariant or a checked inequality failed
    structure,       // inconsistent dimensions in a subspace chain
    input,           // malformed user input (files, flags, JSON)
    unsupported,     // model outside what the toric dictionary handles
    semantic,        // well-formed input used in a meaningless way
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Carries a concrete witness (e.g. the x where monotonicity fails) so the
/// CLI can report where an invariant broke.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string property, std::string witness)
        : Error(ErrorKind::invariant, property + " violated at " + witness),
          property_(std::move(property)), witness_(std::move(witness)) {}

    const std::string& property() const noexcept { return property_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string property_;
    std::string witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace valinv
