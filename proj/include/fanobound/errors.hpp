#pragma once

#include <stdexcept>
#include <string>

namespace fanobound {

/// Base class of every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input or wrong API usage.  The CLI maps this to exit code 1.
struct usage_error : error {
    using error::error;
};

/// A precondition of a cited rule is violated; the message names the
/// violated hypothesis.  The CLI maps this to exit code 2.
struct hypothesis_error : error {
    using error::error;
};

/// A closed-form formula is not applicable at this point; callers are
/// expected to fall back to the series path.
struct formula_inapplicable_error : hypothesis_error {
    using hypothesis_error::hypothesis_error;
};

/// Series with zero constant term cannot be inverted.
struct non_invertible_error : usage_error {
    using usage_error::usage_error;
};

/// Degenerate input (e.g. the zero quadratic form).
struct degenerate_input_error : usage_error {
    using usage_error::usage_error;
};

/// Requested entry lies outside a classification table.
struct table_error : hypothesis_error {
    using hypothesis_error::hypothesis_error;
};

}  // namespace fanobound
