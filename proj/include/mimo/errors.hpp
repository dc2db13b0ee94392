#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mimo {

// Operand shapes do not conform.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A Hermitian factorization hit a non-positive (or non-finite) pivot.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t pivot, const std::string& what)
        : std::runtime_error(what), pivot_(pivot) {}

    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

// Zero-forcing needs 4M <= 2N; the requested load exceeds it.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownUserError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mimo
