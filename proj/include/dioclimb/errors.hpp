#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioclimb {

// Base of every domain error raised by this library. The CLI maps any
// Error to exit code 2 with a one-line diagnostic on stderr.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyEquation : public Error {
public:
    EmptyEquation() : Error("equation must have at least one term") {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class NonPositivePower : public Error {
public:
    explicit NonPositivePower(const std::string& what) : Error(what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DuplicateVariable : public Error {
public:
    explicit DuplicateVariable(const std::string& what) : Error(what) {}
};

class MissingVariable : public Error {
public:
    explicit MissingVariable(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NonPositiveCoefficient : public Error {
public:
    explicit NonPositiveCoefficient(const std::string& what) : Error(what) {}
};

class NonPositiveBudget : public Error {
public:
    NonPositiveBudget() : Error("expansion budget must be at least 1") {}
};

class BoundsTooLarge : public Error {
public:
    explicit BoundsTooLarge(const std::string& what) : Error(what) {}
};

}  // namespace dioclimb
