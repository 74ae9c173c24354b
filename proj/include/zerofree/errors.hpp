#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Enumeration or pair budgets blown (E_q too large, too many grid points).
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A requested prime range reaches past the sieved limit.
class range_exceeds_table : public std::out_of_range {
public:
    explicit range_exceeds_table(const std::string& what) : std::out_of_range(what) {}
};

// Phases failed the linear-independence assumption (exact zero in a linear form).
class degenerate_phases : public std::runtime_error {
public:
    explicit degenerate_phases(const std::string& what) : std::runtime_error(what) {}
};

// A parameter violated one of the pipeline constraints; the message names the inequality.
class constraint_violation : public std::invalid_argument {
public:
    explicit constraint_violation(const std::string& what) : std::invalid_argument(what) {}
};

// Requested tolerance cannot be met with the given evaluation parameters.
class accuracy_unreachable : public std::runtime_error {
public:
    accuracy_unreachable(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_err(achieved) {}
    double achieved_err;
};

} // namespace zf
