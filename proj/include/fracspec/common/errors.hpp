#pragma once

#include <stdexcept>
#include <string>

namespace fracspec {

/// Input outside the mathematical domain of an operation (eps <= 0, alpha >= n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Work or memory budget exceeded (brute-force caps, level budgets, grid guards).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A numerical routine failed to reach its requested tolerance.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejection sampling ran out of draws.
class RetryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or parameter file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fracspec
