#include <random>

#include "doctest.h"
#include "hq/errors.hpp"
#include "hq/parse.hpp"
#include "hq/selftest.hpp"
#include "test_support.hpp"

using namespace hq;

namespace {

HqElement A(const QMode& m) { return HqElement::generator_A(m); }
HqElement B(const QMode& m) { return HqElement::generator_B(m); }
HqElement I(const QMode& m) { return HqElement::identity(m); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Overflow;
}

std::size_t position_of(const std::string& src, const QMode& mode) {
  try {
    parse_element(src, mode);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << src);
  return 0;
}

HqElement random_dense_element(std::mt19937& rng, const QMode& mode) {
  HqElement x(mode);
  int n = static_cast<int>(testing::uniform(rng, 1, 4));
  for (int i = 0; i < n; ++i) {
    x.add_term(static_cast<int>(testing::uniform(rng, 0, 3)), static_cast<int>(testing::uniform(rng, 0, 3)),
               testing::random_scalar(rng, mode));
  }
  return x;
}

}  // namespace

TEST_CASE("modes") {
  CHECK(parse_mode("2") == QMode::rational(2));
  CHECK(parse_mode("-1") == QMode::rational(-1));
  CHECK(parse_mode("5/3") == QMode::rational(mpq_class(5, 3)));
  CHECK(parse_mode("symbolic") == QMode::symbolic());
  CHECK(parse_mode("root:6") == QMode::root_of_unity(6));
  for (const char* bad : {"0", "0/4", "1/0", "root:1", "root:", "root:x", "sym", "", "2 3", "q"})
    CHECK_MESSAGE(code_of([&] { parse_mode(bad); }) == ErrorCode::InvalidMode, bad);
}

TEST_CASE("defining relation parses to the identity") {
  for (const QMode& m : {QMode::symbolic(), QMode::root_of_unity(2), QMode::root_of_unity(5)})
    CHECK(parse_element("A*B - q*B*A", m) == I(m));
  CHECK(parse_element("A*B - 2*B*A", QMode::rational(2)) == I(QMode::rational(2)));
  CHECK(parse_element("A*B - 5/3*B*A", QMode::rational(mpq_class(5, 3))) == I(QMode::rational(mpq_class(5, 3))));
}

TEST_CASE("element construction") {
  for (const QMode& m : testing::all_modes()) {
    HqElement b2 = B(m) * B(m);
    HqElement expected = (b2 + I(m)) * A(m) * A(m) * A(m) + B(m) * A(m);
    HqElement x = parse_element("(B^2+1)*A^3 + B*A", m);
    CHECK(x == expected);
    CHECK(order(x) == 3);
    CHECK(parse_element("  ( B ^ 2 + 1 ) * A ^ 3+B *A ", m) == expected);
    CHECK(parse_element("-A + -(-B)", m) == B(m) - A(m));
    CHECK(parse_element("(A - B)^0", m) == I(m));
    CHECK(parse_element("0", m).is_zero());
    CHECK(parse_element("A*3/4", m) == m.from_rational(mpq_class(3, 4)) * A(m));
  }
  QMode s = QMode::symbolic();
  CHECK(parse_element("q^2*B", s) == s.q() * s.q() * B(s));
  CHECK(parse_element("B/(1 - q)", s) == (s.one() / (s.one() - s.q())) * B(s));
}

TEST_CASE("parse errors") {
  QMode two = QMode::rational(2), s = QMode::symbolic();
  CHECK(code_of([&] { parse_element("A B", s); }) == ErrorCode::ParseError);
  CHECK(position_of("A B", s) == 2);
  CHECK(position_of("2A", s) == 1);
  CHECK(position_of("BA", s) == 0);
  CHECK(position_of("A + ", s) == 4);
  CHECK(position_of("(A + B", s) == 6);
  CHECK(position_of("A + B)", s) == 5);
  CHECK(position_of("A^", s) == 2);
  CHECK(position_of("x", s) == 0);
  CHECK(position_of("A / B", s) == 2);
  CHECK(code_of([&] { parse_element("A^-1", s); }) == ErrorCode::NegativeExponent);
  CHECK(position_of("A + A^-1", s) == 5);
  CHECK(code_of([&] { parse_element("A/0", s); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { parse_element("q*A", two); }) == ErrorCode::QNotAllowedInRationalMode);
  CHECK(position_of("A + q*A", two) == 4);
  CHECK(code_of([&] { parse_element("A^999999999999", s); }) == ErrorCode::ParseError);
}

TEST_CASE("polynomials in x, y") {
  for (const QMode& m : testing::all_modes()) {
    BiPoly x = BiPoly::variable(m, 0), y = BiPoly::variable(m, 1), one = BiPoly::constant(m, m.one());
    CHECK(parse_bipoly("x^2 - y + 1", m) == x * x - y + one);
    CHECK(parse_bipoly("x*y - y*x", m).is_zero());
    CHECK(parse_bipoly("(x + y)^2", m) == x * x + m.from_int(2) * x * y + y * y);
  }
  QMode s = QMode::symbolic();
  CHECK(code_of([&] { parse_bipoly("x y", s); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_bipoly("A*x", s); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_bipoly("x^-1", s); }) == ErrorCode::NegativeExponent);
}

TEST_CASE("Laurent input") {
  for (const QMode& m : testing::all_modes()) {
    LaurentVector v = parse_laurent("t^-2 + 3*t^5", m);
    CHECK(v.lo() == -2);
    CHECK(v.hi() == 5);
    CHECK(v == LaurentVector::monomial(m, -2) + m.from_int(3) * LaurentVector::monomial(m, 5));
    CHECK(parse_laurent("2*t^-3 - t^-3 - t^-3", m).is_zero());
    CHECK(parse_laurent("7", m) == m.from_int(7) * LaurentVector::monomial(m, 0));
  }
  QMode s = QMode::symbolic();
  CHECK(code_of([&] { parse_laurent("(t + 1)^-1", s); }) == ErrorCode::NegativeExponent);
  CHECK(code_of([&] { parse_laurent("A", s); }) == ErrorCode::ParseError);
}

TEST_CASE("rendered text reparses to the same value") {
  std::mt19937 rng(7);
  for (const QMode& m : testing::all_modes()) {
    for (int trial = 0; trial < 60; ++trial) {
      HqElement x = random_dense_element(rng, m);
      CHECK_MESSAGE(parse_element(x.str(), m) == x, x.str());
      Scalar c = testing::random_scalar(rng, m);
      CHECK_MESSAGE(parse_scalar(c.str(), m) == c, c.str());
    }
    for (const auto& pair : theorem_catalog(m, true)) {
      CHECK(parse_element(pair.p.str(), m) == pair.p);
      CHECK(parse_element(pair.q.str(), m) == pair.q);
    }
    BiPoly f = parse_bipoly("(x - 2*y + 1)^3 - x*y", m);
    CHECK(parse_bipoly(f.str({"x", "y"}), m) == f);
    LaurentVector v = parse_laurent("t^-4 - 1/2*t + 5*t^3", m);
    CHECK(parse_laurent(v.str(), m) == v);
  }
}
