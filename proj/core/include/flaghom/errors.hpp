#pragma once

#include <stdexcept>
#include <string>

namespace flaghom {

// Bad user input: unknown type, rank out of range, malformed theta, ...
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// A cross-check between two independent computations failed.
struct MismatchError : std::runtime_error {
    explicit MismatchError(const std::string& m) : std::runtime_error(m) {}
};

// A guard refused to start (or continue) a computation that would blow the
// configured budget: group too large, move-graph frontier overflow, ...
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& m) : std::runtime_error(m) {}
};

// An internal invariant that should hold for every input was violated.
// Seeing one of these is a bug in this library, not in the input.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& m) : std::logic_error(m) {}
};

// Cache file unusable: bad magic, version, truncation, checksum.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace flaghom
