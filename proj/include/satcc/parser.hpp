#pragma once

#include <string>
#include <string_view>

#include "satcc/ast.hpp"

namespace satcc {

// Parses a kernel source file into a module. Throws SyntaxError on malformed
// input and UnsupportedConstruct for C features outside the kernel subset
// (pointers, address-of, struct member access, casts, ...).
KernelModule parse(std::string_view source, std::string source_name = "<input>");

}  // namespace satcc
