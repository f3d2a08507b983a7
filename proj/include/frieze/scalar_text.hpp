#pragma once

/**
 * @file scalar_text.hpp
 * @brief Text form of scalars, shared by every file format and the CLI.
 *
 * Grammar (whitespace ignored, both ASCII '-' and the Unicode minus sign
 * accepted on input, ASCII emitted on output):
 *
 *   expr   := ['-'] term {('+'|'-') term}
 *   term   := factor {('*'|'/') factor}
 *   factor := ['-'] atom ['^' digits]
 *   atom   := digits | name | '(' expr ')'
 *   name   := letter_or_underscore {letter|digit|'_'}
 *
 * With an empty indeterminate universe the result is a plain rational and
 * names are rejected; otherwise the result is a rational function and every
 * name must belong to the universe.
 */

#include "frieze/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace frieze {

struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& universe);

/// Deterministic canonical text; parse_scalar(format_scalar(a)) == a.
std::string format_scalar(const Scalar& s);

std::string format_poly(const MultiPoly& p);

} // namespace frieze
