#pragma once

#include <stdexcept>
#include <string>

namespace monres {

/// Thrown when a computation would exceed a configured resource cap
/// (subset enumeration, Taylor complex size).  The CLI maps this to its
/// own exit code, distinct from input errors.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on exponent overflow.  Exponents are machine integers and all
/// arithmetic on them is checked; inputs large enough to trip this are
/// outside the supported range.
class ExponentOverflow : public std::overflow_error {
public:
    explicit ExponentOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace monres
