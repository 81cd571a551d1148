#ifndef TOPOPLAN_ERRORS_HPP
#define TOPOPLAN_ERRORS_HPP

#include <stdexcept>

namespace topoplan {

/// Raised on malformed inputs, broken invariants, or out-of-range bounds.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a requested result cannot exist (empty feasible set, impossible repair).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on filesystem failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace topoplan

#endif  // TOPOPLAN_ERRORS_HPP
