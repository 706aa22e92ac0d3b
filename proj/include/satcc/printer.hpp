#pragma once

#include <string>

#include "satcc/ast.hpp"

namespace satcc {

// Source renderers. Printing a parsed module and reparsing it yields a
// structurally identical module; pragma lines and for-headers are emitted
// byte-for-byte as captured.
std::string print_expr(const Expr& e);
std::string print_stmt(const Stmt& s, int indent = 0);
std::string print_module(const KernelModule& m);

// Shortest decimal spelling that reparses to exactly v (always contains a
// '.' or exponent so it lexes as a floating literal).
std::string format_double(double v);

}  // namespace satcc
