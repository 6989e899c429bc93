#pragma once

// The acceptance suite, shared by the `selftest` command (reduced size) and
// the acceptance test binary (full size).

#include <functional>
#include <string>
#include <vector>

#include "hq/element.hpp"
#include "hq/json_io.hpp"

namespace hq {

struct CatalogPair {
  std::string name;  // e.g. "C = B*A, f = x^2 + x, g = x^3"
  HqElement p, q;
};

// Commuting pairs f(C), g(C) for C in {A, BA, A + B A^2, (B^2 + 1) A} and
// f, g of degree <= 3. The reduced catalog keeps the first pairs for the two
// smallest choices of C.
std::vector<CatalogPair> theorem_catalog(const QMode& mode, bool full);

struct CriterionOutcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;  // full-size run; 0 means no limit
  std::function<CriterionOutcome(bool full)> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs every criterion and reports {"criteria": [{"id", "title", "pass",
// "detail"}...], "pass": bool}. Contains no timings, so repeated runs
// serialize identically.
Json selftest_report(bool full);

}  // namespace hq
