#pragma once

#include <stdexcept>
#include <string>

namespace triweb {

/// Base class for all triweb errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input data or violated precondition.
struct ValidationError : Error {
    using Error::Error;
};

/// Functor hypothesis (p >= n-1, q = 1 mod p, or the degenerate char-0 rule)
/// violated without an explicit override.
struct HypothesisError : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace triweb
