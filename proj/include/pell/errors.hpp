#pragma once

#include <stdexcept>
#include <string>

namespace pell {

// Base class for everything this library throws on domain errors.
// Programming errors (API misuse) throw std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion of zero requested.
class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("field: inverse of zero") {}
};

// Square root of a quadratic non-residue requested.
class NotASquare : public Error {
public:
    explicit NotASquare(const std::string& what = "field: not a square") : Error(what) {}
};

// Exhaustive enumeration requested over a field too large to enumerate.
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// Conic scaling isomorphism requested with an inconsistent scale factor.
class BadScale : public Error {
public:
    explicit BadScale(const std::string& what) : Error(what) {}
};

// Generalized conic whose identity has a = 0; its parameter map degenerates.
class DegenerateIdentity : public Error {
public:
    explicit DegenerateIdentity(const std::string& what) : Error(what) {}
};

// Parameter value m with m^2 = d; it names no affine point.
class SingularParameter : public Error {
public:
    explicit SingularParameter(const std::string& what) : Error(what) {}
};

// Message-to-point (or message-to-parameter) embedding found no encoding.
class EncodingFailure : public Error {
public:
    explicit EncodingFailure(const std::string& what) : Error(what) {}
};

// Plaintext exceeds the scheme capacity for the active field size.
class MessageTooLarge : public Error {
public:
    explicit MessageTooLarge(const std::string& what) : Error(what) {}
};

// Well-formed ciphertext that decrypts to something no honest encryption produces.
class DecodeFailure : public Error {
public:
    explicit DecodeFailure(const std::string& what) : Error(what) {}
};

// Wire-format violation; carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace pell
