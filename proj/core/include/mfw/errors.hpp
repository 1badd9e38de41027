#pragma once

#include <stdexcept>
#include <string>

namespace mfw {

// Base class for everything thrown by the engine.
class MfwError : public std::runtime_error {
public:
    explicit MfwError(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or syntactic error, carries a 1-based source position.
class ParseError : public MfwError {
public:
    ParseError(const std::string& what, int line, int col)
        : MfwError(format(what, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& what, int line, int col) {
        return "parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what;
    }
    int line_;
    int col_;
};

// Semantic error: ill-typed matrix, failed factorization identity, bad field,
// ring mismatch, and so on. Maps to exit code 2 in the CLI.
class ValidationError : public MfwError {
public:
    explicit ValidationError(const std::string& what) : MfwError("validation error: " + what) {}
};

// Resource guard tripped (for example the unknown-count cap of the hom engine).
class EngineError : public MfwError {
public:
    explicit EngineError(const std::string& what) : MfwError("engine error: " + what) {}
};

} // namespace mfw
