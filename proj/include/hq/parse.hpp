#pragma once

// Text input for modes, scalars, algebra elements, bivariate polynomials and
// Laurent vectors.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' ['-'] integer)?
//   atom   := integer | symbol | '(' expr ')'
//
// Multiplication must be written out: "A B" and "2A" are parse errors, and
// "BA" is an unknown symbol rather than B*A. Division is allowed only by
// expressions that evaluate to a nonzero scalar, which covers literals such
// as 3/4. Negative exponents are accepted only for t in Laurent input.
// Error positions are 0-based byte offsets.

#include <string>

#include "hq/comm_poly.hpp"
#include "hq/element.hpp"
#include "hq/laurent.hpp"
#include "hq/scalar.hpp"

namespace hq {

// "2", "-1", "5/3", "symbolic", "root:6". Throws InvalidMode.
QMode parse_mode(const std::string& src);

// Symbols: q. A trailing " (mod Phi_d)" as printed by Scalar::str is accepted
// when d matches the mode.
Scalar parse_scalar(const std::string& src, const QMode& mode);
// Symbols: A, B, q.
HqElement parse_element(const std::string& src, const QMode& mode);
// Symbols: x, y, q.
BiPoly parse_bipoly(const std::string& src, const QMode& mode);
// Symbols: t, q.
LaurentVector parse_laurent(const std::string& src, const QMode& mode);

}  // namespace hq
