#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A group factor list was rejected (factor < 2, overflow, ...).
struct invalid_group_error : error {
    using error::error;
};

/// A residue passed as a Galois unit is not coprime to the group order.
struct invalid_unit_error : error {
    using error::error;
};

/// The identity element was passed where a nonzero element is required.
struct excluded_identity_error : error {
    using error::error;
};

/// A connection set contained the identity.
struct identity_in_set_error : error {
    using error::error;
};

/// A connection set was not closed under negation.
struct asymmetry_error : error {
    using error::error;
};

/// An operation's documented precondition was violated.
struct precondition_error : error {
    using error::error;
};

/// An enumeration or matrix cap would be exceeded.
struct resource_limit_error : error {
    using error::error;
};

/// The brute-force oracle was handed input it is not specified for.
struct oracle_misuse_error : error {
    using error::error;
};

/// A library invariant failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace cayley
