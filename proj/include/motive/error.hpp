#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motive {

/// Runtime error carrying a stable machine-readable code ("SpaceMismatch",
/// "NonDivisible", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

/// Parse error with the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("SyntaxError", message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation-time type error, positioned at the offending AST node.
class TypeError : public Error {
public:
    TypeError(std::size_t offset, std::string path, const std::string& message)
        : Error("TypeError", message + " (node " + path + ", byte " + std::to_string(offset) + ")"),
          offset_(offset), path_(std::move(path)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::size_t offset_;
    std::string path_;
};

}  // namespace motive
