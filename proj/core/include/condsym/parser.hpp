#pragma once

#include <stdexcept>
#include <string>

#include "condsym/expr.hpp"

namespace condsym {

struct ParseError : std::runtime_error {
    // `pos` is the 0-based byte position; the reported offset is 1-based.
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos + 1)), offset(pos + 1) {}
    std::size_t offset;
};

// Recursive-descent parser for the ASCII expression grammar:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' base)?
//   base   := rational | ident | ident '(' expr {',' expr} ')'
//           | 'D[' ident (',' int)+ ']' [ '(' expr {',' expr} ')' ]
//           | '(' expr ')' | '-' rational
//
// Identifiers: x0..x9, w1..w9, w, u, alpha, n, beta, lambda, k, phi, psi, F,
// m1..m9, c1..c3 and the builtins ln, sqrt, abs, exp. Rationals: int or
// int/int. Anything else raises ParseError with the byte offset.
Expr parse(const std::string& text);

} // namespace condsym
