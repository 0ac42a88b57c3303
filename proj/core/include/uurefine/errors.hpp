#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace uurefine {

/// Base class for all toolkit errors. `kind()` is a stable machine-readable
/// tag ("duplicate-id", "degenerate-priors", ...); what() carries the
/// human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Rejected inputs: invariant violations, malformed files, bad configuration.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Failures that arise while computing: divergence, degenerate priors met
/// mid-run, I/O faults.
class RuntimeFailure : public Error {
public:
    using Error::Error;
};

} // namespace uurefine
