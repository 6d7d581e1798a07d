#pragma once

#include <stdexcept>
#include <string>

namespace tailel {

// Argument outside the mathematical domain of a function (e.g. u not in (0,1)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid distribution or policy parameter.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sample fraction k (or a k-grid) outside [1, n-1].
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// No usable observations remain after filtering.
class EmptySampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tailel
