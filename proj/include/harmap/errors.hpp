#pragma once

#include <stdexcept>
#include <string>

namespace harmap {

// Evaluation point outside the open unit disk, or a radius outside (0, 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed call: empty input, bad weights, unknown identifiers.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A closed form was requested for a function that has none.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A sampled curve collapsed: f(z) or the tangent vanished at a sample.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reference map with vanishing derivative on the sampling grid.
class SingularReferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace harmap
