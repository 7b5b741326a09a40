#pragma once

#include <stdexcept>
#include <string>

namespace oslo {

/// Raised when a request exceeds an exhaustiveness guard. Carries the guard
/// description so refusals can be reported rather than silently downgraded.
class guard_error : public std::runtime_error {
public:
    guard_error(std::string guard, const std::string& what)
        : std::runtime_error(what), guard_(std::move(guard)) {}
    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

/// A deterministic process ran out of steps before reaching a conclusion.
/// With correct step bounds this indicates a bug, not a data condition.
class inconclusive_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class degenerate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ill_conditioned_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace oslo
