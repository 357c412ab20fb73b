#pragma once

#include <stdexcept>
#include <string>

namespace mvrcg {

/// Bad argument to a graph or statistics query (unknown vertex, overlapping
/// separation sets, mismatched vertex sets).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graph does not have the structure an operation requires
/// (partially directed cycle, non-chordal undirected part).
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list, CSV, or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid learner, tester, or benchmark configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be opened, written or renamed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mvrcg
