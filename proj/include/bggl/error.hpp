#pragma once

#include <stdexcept>
#include <string>

namespace bggl {

/// Argument outside the mathematical domain of a function or law.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sample configuration for which an estimator does not exist or is not unique.
class DegenerateSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity that is mathematically infinite (Fisher information for alpha <= 1).
class InfiniteInformationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative routine failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV parsing, misaligned series).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bggl
