#pragma once

#include <stdexcept>
#include <string>

namespace q8n {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (cyclotomic literals, JSON payload values).
// `pos` is a 0-based character offset into the offending string.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t pos_)
        : Error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// Two scalars from different cyclotomic fields met in one operation.
struct ModulusMismatch : Error {
    using Error::Error;
};

// Structural validation failed: bad multiplication table, non-homomorphic
// representation, rep not matching a centralizer, schema violations.
struct ValidationError : Error {
    using Error::Error;
};

// Requested symmetrizer degree exceeds the configured work ceiling.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A classifier verdict and the truncated Hilbert-series oracle disagree
// on a finite dimension. Fatal by design.
struct ContradictionError : Error {
    using Error::Error;
};

// No built-in irreducible representations for a centralizer and none supplied.
struct MissingIrreps : Error {
    std::string centralizer;
    MissingIrreps(const std::string& what, std::string centralizer_)
        : Error(what), centralizer(std::move(centralizer_)) {}
};

// An input file is absent or unreadable.
struct FileNotFound : Error {
    using Error::Error;
};

} // namespace q8n
