#pragma once

// Shared random generators for property-style tests.

#include <random>
#include <vector>

#include "hq/element.hpp"
#include "hq/scalar.hpp"

namespace hq::testing {

inline std::vector<QMode> all_modes() {
  return {QMode::rational(2), QMode::rational(1), QMode::rational(mpq_class(5, 3)), QMode::rational(-1),
          QMode::symbolic(), QMode::root_of_unity(2), QMode::root_of_unity(3), QMode::root_of_unity(6)};
}

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline QPoly random_qpoly(std::mt19937& rng, int max_degree) {
  std::vector<mpq_class> c;
  int deg = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 0; i <= deg; ++i) {
    c.emplace_back(uniform(rng, -4, 4), uniform(rng, 1, 3));
    c.back().canonicalize();
  }
  return QPoly(c);
}

inline Scalar random_scalar(std::mt19937& rng, const QMode& mode) {
  switch (mode.kind()) {
    case QMode::Kind::Rational: return Scalar::rational(mpq_class(uniform(rng, -9, 9), uniform(rng, 1, 5)));
    case QMode::Kind::Symbolic: {
      QPoly den = random_qpoly(rng, 2);
      if (den.is_zero()) den = QPoly::constant(1);
      return Scalar::rational_function(random_qpoly(rng, 2), den);
    }
    case QMode::Kind::RootOfUnity: return Scalar::cyclotomic(mode.field(), random_qpoly(rng, 4));
  }
  return mode.zero();
}

inline Scalar random_nonzero_scalar(std::mt19937& rng, const QMode& mode) {
  for (;;) {
    Scalar s = random_scalar(rng, mode);
    if (!s.is_zero()) return s;
  }
}

// Integer-valued coefficients keep symbolic-mode tests fast.
inline HqElement random_element(std::mt19937& rng, const QMode& mode, int max_terms, int max_exp) {
  HqElement x(mode);
  int n = static_cast<int>(uniform(rng, 1, max_terms));
  for (int i = 0; i < n; ++i) {
    x.add_term(static_cast<int>(uniform(rng, 0, max_exp)), static_cast<int>(uniform(rng, 0, max_exp)),
               mode.from_int(uniform(rng, -3, 3)));
  }
  return x;
}

inline HqElement random_nonzero_element(std::mt19937& rng, const QMode& mode, int max_terms, int max_exp) {
  for (;;) {
    HqElement x = random_element(rng, mode, max_terms, max_exp);
    if (!x.is_zero()) return x;
  }
}

}  // namespace hq::testing
