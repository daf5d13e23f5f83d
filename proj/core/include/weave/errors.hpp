#pragma once

#include <stdexcept>
#include <string>

namespace weave {

/// Malformed input: unparseable files, violated invariants, bad arguments.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure could not produce a trustworthy result
/// (degenerate assignment, rank deficiency, lost hermiticity, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The planner proved (or gave up proving) that the target graph cannot be
/// realized on the device. Carries the first unroutable edge when known.
class InfeasibleError : public ValidationError {
public:
    InfeasibleError(const std::string& msg, int u = -1, int v = -1)
        : ValidationError(msg), witness_u(u), witness_v(v) {}
    int witness_u;
    int witness_v;
};

/// Planner search budget exhausted before a conclusion was reached.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace weave
