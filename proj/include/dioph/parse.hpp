#pragma once

// Text form of equations.
//
//   equation := poly ('=' poly)?          ("L = R" is stored as L - R)
//   poly     := ('+'|'-')? term (('+'|'-') term)*
//   term     := integer ('*' factors)? | integer factors | factors
//   factors  := factor ('*' factor)*
//   factor   := 'x' index ('^' exponent)?
//
// Variable indices start at 1; "x3" alone declares variables x1..x3, and the
// undeclared ones simply never occur. Integers are unbounded. Exponents must
// be positive. Whitespace is free between tokens; juxtaposition is
// multiplication only between a coefficient and the first factor ("2x1").

#include "dioph/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace dioph {

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(std::string message, std::size_t pos)
        : std::runtime_error(std::move(message)), position(pos) {}
};

Polynomial parse_equation(const std::string& text);

// Canonical rendering, always of the form "<poly> = 0"; terms appear in
// descending lexicographic exponent order. parse_equation(render(p)) == p.
std::string render(const Polynomial& p);

}  // namespace dioph
