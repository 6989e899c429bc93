#pragma once

#include <string>

#include "hq/scalar.hpp"

namespace hq::detail {

// "x", "x^3", or "" for a zero exponent.
std::string power_str(const std::string& var, long e);

// Joins two monomial factors with '*', skipping empty ones.
std::string join_factors(const std::string& a, const std::string& b);

// Appends "c*monomial" to a sum being rendered, folding the sign of c into the
// joining operator. An empty monomial stands for 1.
void append_term(std::string& out, const Scalar& c, const std::string& monomial);

}  // namespace hq::detail
