#pragma once

#include <stdexcept>
#include <string>

namespace grcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input: group specs, ring specs, elements, bundles.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An algebraic precondition failed. `certificate` carries the evidence
/// (a gcd, a maximal independent subset, a witness) in printable form.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, std::string certificate = {})
        : Error(certificate.empty() ? what : what + ": " + certificate),
          certificate_(std::move(certificate)) {}

    const std::string& certificate() const noexcept { return certificate_; }

private:
    std::string certificate_;
};

/// A configured resource cap (enumeration size, group order) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace grcodes
