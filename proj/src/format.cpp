#include "hq/format.hpp"

namespace hq::detail {

std::string power_str(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

std::string join_factors(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

void append_term(std::string& out, const Scalar& c, const std::string& monomial) {
  const bool neg = c.looks_negative();
  const Scalar a = neg ? -c : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += a.coefficient_str();
  } else if (a.is_one()) {
    out += monomial;
  } else {
    out += a.coefficient_str() + "*" + monomial;
  }
}

}  // namespace hq::detail
