#ifndef GNORM_PARSE_HPP
#define GNORM_PARSE_HPP

#include <string>

#include "gnorm/poly.hpp"

namespace gnorm {

// Parses the shared polynomial text syntax: terms like `3*x^2*y + y + 1`,
// variables [a-zA-Z][a-zA-Z0-9_]*, `^` for powers, `-` and parentheses
// accepted, coefficients reduced mod p. Unknown variables are an error.
MultiPoly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace gnorm

#endif
