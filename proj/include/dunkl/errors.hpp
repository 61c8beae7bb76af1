#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dunkl {

// Division of a polynomial by a linear form left a nonzero remainder.
class ExactDivisionError : public std::runtime_error {
public:
    explicit ExactDivisionError(const std::string& what) : std::runtime_error(what) {}
};

// Group closure exceeded the configured element budget.
class ClosureBudgetExceeded : public std::runtime_error {
public:
    explicit ClosureBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A root-system preset failed a structural sanity check.
class InvalidPreset : public std::runtime_error {
public:
    explicit InvalidPreset(const std::string& what) : std::runtime_error(what) {}
};

// An operator does not preserve the homogeneous component it was restricted to.
class NotGraded : public std::runtime_error {
public:
    explicit NotGraded(const std::string& what) : std::runtime_error(what) {}
};

// A relation or named operator was requested outside its declared scope.
class ScopeMismatch : public std::runtime_error {
public:
    explicit ScopeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Expression syntax error; position is 1-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& expected, const std::string& what)
        : std::runtime_error(what), position_(position), expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace dunkl
