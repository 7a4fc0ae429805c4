#pragma once

#include "defq/polyvec.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace defq {

struct ParseError : std::runtime_error {
    ParseError(unsigned line, unsigned col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    unsigned line, col;
};

enum class ExprKind { poly, vector, bivector };

struct ParseResult {
    PolyVec value;                       // arity 0 for poly
    std::vector<std::string> warnings;   // e.g. "d1^d1 is zero"
};

/// Grammar: rational literals, variables x1..xd, + - * ^, basis symbols
/// d1..dd joined by ^ for wedge, parentheses. '^' after a polynomial atom
/// is a power (nonnegative integer); between basis symbols it is a wedge.
ParseResult parse_expression(const std::string& src, ExprKind kind, std::size_t dim);

/// Convenience wrapper for kind=poly.
Poly parse_poly(const std::string& src, std::size_t dim);

} // namespace defq
