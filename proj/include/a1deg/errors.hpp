#pragma once

#include <stdexcept>
#include <string>

namespace a1deg {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations on mathematical domains: zero where a unit is
// required, composite modulus, mismatched fields, uncertifiable square
// classes, and the like.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// deg(numerator) <= deg(denominator), so f/g does not fix the point at
// infinity.
struct NotPointed : Error {
    explicit NotPointed(const std::string& msg) : Error(msg) {}
};

// Numerator and denominator share a factor.
struct NotReduced : Error {
    explicit NotReduced(const std::string& msg) : Error(msg) {}
};

// A local computation was requested at a point the exact-arithmetic layer
// cannot represent (a zero living in a proper field extension).
struct UnsupportedPoint : Error {
    explicit UnsupportedPoint(const std::string& msg) : Error(msg) {}
};

// The vanishing locus of the numerator is not fully rational, so the
// local-to-global comparison cannot enumerate it.
struct UnsupportedVanishingLocus : Error {
    explicit UnsupportedVanishingLocus(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

} // namespace a1deg
