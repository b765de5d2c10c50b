#pragma once

#include <stdexcept>
#include <string>

namespace mgc {

struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedInput : std::runtime_error {
    explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

struct NotInHeart : std::runtime_error {
    explicit NotInHeart(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationFailure : std::runtime_error {
    explicit GenerationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mgc
