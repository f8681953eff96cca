#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homhopf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct Singular : Error {
    Singular(const std::string& what, std::size_t rank_found)
        : Error(what + " (rank " + std::to_string(rank_found) + ")"), rank(rank_found) {}
    std::size_t rank;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct NotAMorphism : Error {
    using Error::Error;
};

struct NotAGroup : Error {
    using Error::Error;
};

struct NotAnAutomorphism : Error {
    using Error::Error;
};

struct CrossCheckFailed : Error {
    using Error::Error;
};

// Definition-file errors carry the 1-based position of the offending token.
struct FileError : Error {
    FileError(const std::string& kind, std::size_t l, std::size_t c, const std::string& what)
        : Error(kind + " at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what),
          line(l),
          column(c) {}
    std::size_t line;
    std::size_t column;
};

struct ParseError : FileError {
    ParseError(std::size_t l, std::size_t c, const std::string& what) : FileError("parse error", l, c, what) {}
};

struct RangeError : FileError {
    RangeError(std::size_t l, std::size_t c, const std::string& what) : FileError("index out of range", l, c, what) {}
};

struct DuplicateEntry : FileError {
    DuplicateEntry(std::size_t l, std::size_t c, const std::string& what)
        : FileError("duplicate entry", l, c, what) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace homhopf
