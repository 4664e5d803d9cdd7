#pragma once

#include <stdexcept>
#include <string>

namespace covering {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument supplied by the caller (bad precision, out-of-range sigma, ...).
class parameter_error : public error {
public:
    using error::error;
};

// Mathematical domain violation (sqrt of negative, asin out of [-1,1], ...).
class domain_error : public error {
public:
    using error::error;
};

// Construction degenerated: intersections coincide or vanish.
class degeneracy_error : public error {
public:
    using error::error;
};

// A boundary chain is open, non-convex or otherwise unusable.
class malformed_boundary_error : public error {
public:
    using error::error;
};

// Root bracket does not straddle a sign change.
class bracket_error : public error {
public:
    using error::error;
};

// Internal cross-check failed; indicates a bug rather than bad input.
class inconsistency_error : public error {
public:
    using error::error;
};

} // namespace covering
