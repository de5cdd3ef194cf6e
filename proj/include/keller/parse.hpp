#pragma once

#include "keller/polynomial.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace keller {

// Syntax or semantic error in a polynomial expression, with a 1-based
// source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Grammar: terms joined by + or - (a single leading sign is allowed);
// a term is factors joined by explicit '*'; a factor is a variable or a
// parenthesized expression, optionally raised with '^' to a nonnegative
// integer, or a rational literal (integer or integer/integer).
// Whitespace is insignificant. `line_offset` shifts reported positions
// for callers that parse one line of a larger document.
Polynomial parse_poly(const std::string& text, std::span<const std::string> vars,
                      int line_offset = 1);

bool is_valid_identifier(const std::string& name);

}  // namespace keller
