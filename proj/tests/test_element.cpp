#include "doctest.h"
#include "hq/element.hpp"
#include "hq/errors.hpp"
#include "test_support.hpp"

using namespace hq;

namespace {

HqElement A(const QMode& m) { return HqElement::generator_A(m); }
HqElement B(const QMode& m) { return HqElement::generator_B(m); }
HqElement I(const QMode& m) { return HqElement::identity(m); }

std::vector<QMode> oracle_modes() {
  return {QMode::rational(2), QMode::rational(1), QMode::symbolic(), QMode::root_of_unity(2)};
}

}  // namespace

TEST_CASE("defining relation AB - qBA = I in every mode") {
  for (const auto& m : testing::all_modes()) {
    HqElement ab = normal_product(A(m), B(m));
    CHECK(ab.coefficient(1, 1) == m.q());
    CHECK(ab.coefficient(0, 0) == m.one());
    CHECK(ab.size() == 2);
    CHECK(ab - m.q() * normal_product(B(m), A(m)) == I(m));
  }
}

TEST_CASE("normal product examples") {
  QMode s = QMode::symbolic();
  // A B^2 = q^2 B^2 A + (1 + q) B
  HqElement x = A(s) * B(s) * B(s);
  CHECK(x.coefficient(2, 1) == s.q_power(2));
  CHECK(x.coefficient(1, 0) == q_integer(2, s));
  CHECK(x.size() == 2);
  CHECK(x.str() == "q^2*B^2*A + (q + 1)*B");

  std::mt19937 rng(7);
  for (const auto& m : testing::all_modes()) {
    HqElement p = testing::random_element(rng, m, 4, 3);
    CHECK(I(m) * p == p);
    CHECK(p * I(m) == p);
  }
}

TEST_CASE("rewrite oracle examples") {
  QMode s = QMode::symbolic();
  HqElement ab = rewrite_oracle_product(A(s), B(s));
  CHECK(ab.coefficient(1, 1) == s.q());
  CHECK(ab.coefficient(0, 0) == s.one());
  CHECK(ab.size() == 2);

  // A^2 B = q^2 B A^2 + {2}_q A, which is B A^2 at q = -1.
  QMode m1 = QMode::rational(-1);
  CHECK(rewrite_oracle_product(power(A(m1), 2), B(m1)) == B(m1) * power(A(m1), 2));
  CHECK(rewrite_oracle_product(power(A(m1), 2), B(m1)).str() == "B*A^2");

  CHECK(rewrite_oracle_product(B(s), A(s)) == HqElement::monomial(s, 1, 1, s.one()));
}

TEST_CASE("closed-form product agrees with the rewrite oracle on monomials up to exponent 5") {
  for (const auto& m : oracle_modes()) {
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j)
        for (int k = 0; k <= 5; ++k)
          for (int l = 0; l <= 5; ++l) {
            HqElement x = HqElement::monomial(m, i, j, m.one());
            HqElement y = HqElement::monomial(m, k, l, m.one());
            REQUIRE_MESSAGE(normal_product(x, y) == rewrite_oracle_product(x, y),
                            m.name() << " B^" << i << "A^" << j << " * B^" << k << "A^" << l);
          }
  }
}

TEST_CASE("q = 1 reproduces Weyl algebra ordering: A^j B^k = sum_r C(j,r) C(k,r) r! B^{k-r} A^{j-r}") {
  QMode one = QMode::rational(1);
  auto binom = [](long n, long r) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), n, r);
    return v;
  };
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= 4; ++k) {
      HqElement expected(one);
      for (int r = 0; r <= std::min(j, k); ++r) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), r);
        expected.add_term(k - r, j - r, one.from_rational(mpq_class(binom(j, r) * binom(k, r) * fact)));
      }
      HqElement lhs = power(A(one), j) * power(B(one), k);
      CHECK(lhs == expected);
      CHECK(rewrite_oracle_product(power(A(one), j), power(B(one), k)) == expected);
    }
  }
  CHECK(commutator(A(one), B(one)) == I(one));
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(42);
  for (const auto& m : testing::all_modes()) {
    for (int trial = 0; trial < 25; ++trial) {
      HqElement x = testing::random_element(rng, m, 4, 3);
      HqElement y = testing::random_element(rng, m, 4, 3);
      HqElement z = testing::random_element(rng, m, 4, 3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("order is additive for nonzero products") {
  std::mt19937 rng(5);
  for (const auto& m : testing::all_modes()) {
    for (int trial = 0; trial < 25; ++trial) {
      HqElement x = testing::random_nonzero_element(rng, m, 4, 4);
      HqElement y = testing::random_nonzero_element(rng, m, 4, 4);
      CHECK(order(x * y) == *order(x) + *order(y));
    }
  }
}

TEST_CASE("commutators") {
  QMode s = QMode::symbolic();
  // [A, B] = (q - 1) BA + I
  HqElement c = commutator(A(s), B(s));
  CHECK(c.coefficient(1, 1) == s.q() - s.one());
  CHECK(c.coefficient(0, 0) == s.one());
  CHECK(c.size() == 2);

  std::mt19937 rng(3);
  for (const auto& m : testing::all_modes()) {
    HqElement p = testing::random_element(rng, m, 3, 3);
    CHECK(commutes(p, p * p));
  }

  QMode m1 = QMode::rational(-1);
  CHECK(commutator(power(A(m1), 2), B(m1)).is_zero());
  CHECK(!commutes(A(s), B(s)));
}

TEST_CASE("order, degree, coefficient polynomials") {
  QMode m = QMode::rational(2);
  // (B^2 + 1) A^3 + B A
  HqElement p = HqElement::monomial(m, 2, 3, m.one()) + HqElement::monomial(m, 0, 3, m.one()) +
                HqElement::monomial(m, 1, 1, m.one());
  CHECK(order(p) == 3);
  CHECK(degree(p) == 5);
  CHECK(coefficient_degree(p) == 2);
  CHECK(coefficient_poly(p, 3).str("X") == "X^2 + 1");
  CHECK(coefficient_poly(p, 1).str("X") == "X");
  CHECK(coefficient_poly(p, 2).is_zero());
  CHECK(p.str() == "B^2*A^3 + A^3 + B*A");

  HqElement zero(m);
  CHECK(!order(zero).has_value());
  CHECK(!degree(zero).has_value());
  CHECK(zero.str() == "0");
}

TEST_CASE("eval_bipoly") {
  QMode m = QMode::rational(2);
  std::mt19937 rng(11);
  HqElement p = testing::random_element(rng, m, 3, 3);
  BiPoly x_minus_y = BiPoly::variable(m, 0) - BiPoly::variable(m, 1);
  CHECK(eval_bipoly(x_minus_y, p, p).is_zero());

  // x^2 + 1 - y at (A, A^2 + I)
  BiPoly f = BiPoly::variable(m, 0, 2) + BiPoly::constant(m, m.one()) - BiPoly::variable(m, 1);
  CHECK(eval_bipoly(f, A(m), power(A(m), 2) + I(m)).is_zero());

  BiPoly xy = BiPoly::variable(m, 0) * BiPoly::variable(m, 1);
  CHECK(eval_bipoly(xy, A(m), A(m)) == power(A(m), 2));

  try {
    (void)eval_bipoly(xy, A(m), B(m));
    FAIL("expected NonCommutingSubstitution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommutingSubstitution);
  }
  CHECK_THROWS_AS((void)eval_bipoly(xy, A(m), A(QMode::rational(3))), Error);
}

TEST_CASE("centrality") {
  QMode m1 = QMode::rational(-1);
  CHECK(is_central(power(A(m1), 2)));
  CHECK(is_central(power(B(m1), 2)));
  CHECK(!is_central(A(m1)));

  QMode two = QMode::rational(2);
  CHECK(!is_central(power(A(two), 2)));
  // [A^2, B] = {2}_2 A = 3A
  HqElement c = commutator(power(A(two), 2), B(two));
  CHECK(c == HqElement::monomial(two, 0, 1, two.from_int(3)) + HqElement::monomial(two, 1, 2, two.from_int(3)));
  CHECK(is_central(HqElement::scalar(two, two.from_int(7))));

  QMode r3 = QMode::root_of_unity(3);
  CHECK(is_central(power(A(r3), 3)));
  CHECK(!is_central(power(A(r3), 2)));
}

TEST_CASE("mixed modes are rejected") {
  try {
    (void)(A(QMode::rational(2)) * B(QMode::symbolic()));
    FAIL("expected MixedModes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedModes);
  }
}
