#pragma once

#include <stdexcept>
#include <string>

namespace zonekit {

// Bad user input: scene files, site specs, probe parameters. The CLI maps
// this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A kernel invariant broke; indicates a bug, not bad input. Exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Iteration budget exhausted without reaching the requested tolerance. Exit
// code 3 when the caller asked for a hard guarantee.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A measurement contradicted a property the theory promises under the active
// assumptions. Exit code 4.
class TheoryViolation : public std::runtime_error {
public:
    explicit TheoryViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zonekit
