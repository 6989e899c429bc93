#pragma once

// Elements of the q-deformed Heisenberg algebra H_q = K<A, B | AB - qBA = I>
// in normal form  sum_{i,j} c_ij B^i A^j.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/comm_poly.hpp"
#include "hq/scalar.hpp"

namespace hq {

// B^b A^a
struct Monomial {
  int b = 0;
  int a = 0;

  int total_degree() const { return a + b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic, largest first: total degree, then B-exponent.
struct MonomialDisplayOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.total_degree() != y.total_degree()) return x.total_degree() > y.total_degree();
    return x.b > y.b;
  }
};

// Univariate polynomial over Scalar, ascending coefficients, trimmed.
class ScalarPoly {
 public:
  explicit ScalarPoly(QMode mode) : mode_(std::move(mode)) {}
  ScalarPoly(QMode mode, std::vector<Scalar> coeffs);

  const QMode& mode() const { return mode_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : mode_.zero(); }

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.mode_ == b.mode_ && a.c_ == b.c_; }

  // Descending, e.g. "X^2 + 1".
  std::string str(const std::string& var) const;

 private:
  QMode mode_;
  std::vector<Scalar> c_;
};

class HqElement {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialDisplayOrder>;

  explicit HqElement(QMode mode) : mode_(std::move(mode)) {}

  static HqElement identity(const QMode& mode) { return scalar(mode, mode.one()); }
  static HqElement scalar(const QMode& mode, const Scalar& c) { return monomial(mode, 0, 0, c); }
  static HqElement generator_A(const QMode& mode) { return monomial(mode, 0, 1, mode.one()); }
  static HqElement generator_B(const QMode& mode) { return monomial(mode, 1, 0, mode.one()); }
  static HqElement monomial(const QMode& mode, int b, int a, const Scalar& c);

  const QMode& mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(int b, int a) const;
  void add_term(int b, int a, const Scalar& c);

  HqElement operator-() const;
  HqElement& operator+=(const HqElement& o);
  HqElement& operator-=(const HqElement& o);
  friend HqElement operator+(HqElement x, const HqElement& y) { return x += y; }
  friend HqElement operator-(HqElement x, const HqElement& y) { return x -= y; }
  friend HqElement operator*(const Scalar& s, const HqElement& x);
  friend HqElement operator*(const HqElement& x, const HqElement& y);

  friend bool operator==(const HqElement& x, const HqElement& y) { return x.mode_ == y.mode_ && x.terms_ == y.terms_; }
  friend bool operator!=(const HqElement& x, const HqElement& y) { return !(x == y); }

  // Human form with B-powers left of A-powers, e.g. "B^2*A^3 + A^3 + B*A".
  std::string str() const;

  void check_same_mode(const HqElement& o) const;

 private:
  QMode mode_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HqElement& x);

// Normal form of XY via the closed-form reordering
//   A^j B^k = sum_r q^{(j-r)(k-r)} [j r]_q [k r]_q {r}_q! B^{k-r} A^{j-r}.
HqElement normal_product(const HqElement& x, const HqElement& y);

// Normal form of XY computed only by rewriting one adjacent "AB" into
// "qBA + I" at a time. Exponentially slow; a test oracle.
HqElement rewrite_oracle_product(const HqElement& x, const HqElement& y);

// Coefficient of B^{k-r} A^{j-r} in the normal form of A^j B^k.
Scalar reorder_coefficient(int j, int k, int r, const QMode& mode);

HqElement power(const HqElement& x, int e);

HqElement commutator(const HqElement& p, const HqElement& q);
bool commutes(const HqElement& p, const HqElement& q);

// Highest A-exponent; nullopt for the zero element.
std::optional<int> order(const HqElement& p);
// Highest total degree i + j; nullopt for the zero element.
std::optional<int> degree(const HqElement& p);
// Highest B-exponent, i.e. max_j deg p_j; nullopt for the zero element.
std::optional<int> coefficient_degree(const HqElement& p);

// p_j(X) = sum_i c_ij X^i.
ScalarPoly coefficient_poly(const HqElement& p, int j);

// F(P, Q) = sum F_ab P^a Q^b; P and Q must commute.
HqElement eval_bipoly(const BiPoly& f, const HqElement& p, const HqElement& q);

// [X, A] = 0 and [X, B] = 0.
bool is_central(const HqElement& x);

}  // namespace hq
