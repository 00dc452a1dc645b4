#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fipo {

/// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A required optional slot was absent when rendering a template.
class MissingSlot : public Error {
public:
    using Error::Error;
};

/// A prompt that must be non-empty was empty or all whitespace.
class EmptyPrompt : public Error {
public:
    using Error::Error;
};

/// Malformed line in an input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DuplicateId : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A value that must be finite was NaN or infinite.
class NonFinite : public Error {
public:
    using Error::Error;
};

class EmptySequence : public Error {
public:
    using Error::Error;
};

class EmptyBatch : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class OutOfVocab : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class MissingWeight : public Error {
public:
    using Error::Error;
};

class UnknownIteration : public Error {
public:
    using Error::Error;
};

class NoRuns : public Error {
public:
    using Error::Error;
};

enum class BackendErrorKind { Timeout, RateLimited, Protocol, Auth, Transport };

/// Failure talking to a generation backend, after retries where applicable.
class BackendError : public Error {
public:
    BackendError(BackendErrorKind kind, const std::string& what)
        : Error(what), kind_(kind) {}
    BackendErrorKind kind() const { return kind_; }

private:
    BackendErrorKind kind_;
};

}  // namespace fipo
