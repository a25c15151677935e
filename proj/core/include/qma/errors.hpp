#pragma once

#include <stdexcept>
#include <string>

namespace qma {

// Error taxonomy shared by all modules. Every throwing path uses one of
// these so callers (and the CLI exit-code mapping) can tell input problems,
// mathematical failures and resource caps apart.

struct ArithmeticError : std::runtime_error {
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PlacementError : std::runtime_error {
    explicit PlacementError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSkewInvertibleError : std::runtime_error {
    explicit NotSkewInvertibleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotEvenError : std::runtime_error {
    explicit NotEvenError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qma
