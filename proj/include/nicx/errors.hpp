#pragma once
#include <stdexcept>
#include <string>

namespace nicx {

// Bad input: out-of-range parameters, malformed files, contract violations by
// the caller.  CLI maps this to exit code 2.
struct invalid_request : std::runtime_error {
    explicit invalid_request(const std::string& m) : std::runtime_error(m) {}
};

// The request is well-formed but too large for the configured limits.
// CLI maps this to exit code 2 as well; --force raises the limits.
struct infeasible : std::runtime_error {
    explicit infeasible(const std::string& m) : std::runtime_error(m) {}
};

// A mathematical invariant that is supposed to hold did not.  Getting one of
// these means either a bug or a genuinely false expectation; it is never
// swallowed.  CLI maps this to exit code 1.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& m) : std::logic_error(m) {}
};

// A verification/acceptance check failed (computed value != expected value).
struct check_failure : std::runtime_error {
    explicit check_failure(const std::string& m) : std::runtime_error(m) {}
};

} // namespace nicx
