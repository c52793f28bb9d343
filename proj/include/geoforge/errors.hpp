#pragma once

#include <stdexcept>
#include <string>

namespace geoforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Zero denominator, division by zero.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error(what) {}
};

// Coincident points, collinear triangle vertices.
struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& what) : Error(what) {}
};

// Parallel distinct lines passed to intersect().
struct NoIntersectionError : Error {
    explicit NoIntersectionError(const std::string& what) : Error(what) {}
};

// Identical lines passed to intersect().
struct AmbiguousIntersectionError : Error {
    explicit AmbiguousIntersectionError(const std::string& what) : Error(what) {}
};

// A compound construction failed; the message names the offending objects.
struct ConstructionError : Error {
    explicit ConstructionError(const std::string& what) : Error(what) {}
};

}  // namespace geoforge
