#pragma once

#include <stdexcept>
#include <string>

namespace satcc {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

inline std::string loc_str(SourceLoc loc) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.col);
}

// Parse-time failure with position info.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(SourceLoc loc, const std::string& msg)
        : std::runtime_error(loc_str(loc) + ": " + msg), loc_(loc) {}

    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

// Grammar-level rejection of constructs outside the kernel subset
// (pointer dereference, member access, address-of).
class UnsupportedConstruct : public SyntaxError {
public:
    UnsupportedConstruct(SourceLoc loc, const std::string& construct)
        : SyntaxError(loc, "unsupported construct: " + construct),
          construct_(construct) {}

    const std::string& construct() const { return construct_; }

private:
    std::string construct_;
};

// Runtime failure in the reference interpreter.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace satcc
