#pragma once

#include <stdexcept>

namespace simplexcert {

// Operands live in different ambient dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An angle was requested at a zero-length ray.
class DegenerateAngleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A geometric property that an operation relies on did not hold exactly.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace simplexcert
