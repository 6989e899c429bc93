#pragma once

// Exact scalars for the three admissible choices of q:
//
//   * a nonzero rational number       -> scalars are rationals,
//   * a symbolic indeterminate        -> scalars are rational functions in q,
//   * a primitive d-th root of unity  -> scalars are residues mod Phi_d(q).
//
// Every Scalar is kept in a canonical form, so equality is structural.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "hq/poly.hpp"

namespace hq {

struct CyclotomicField {
  int order;  // d
  ZPoly phi;  // Phi_d, monic
  QPoly phi_q;
};

class Scalar {
 public:
  enum class Domain { Rational, RationalFunction, Cyclotomic };

  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(mpq_class v);
  // num/den in Q(q), canonicalized; den must be nonzero.
  static Scalar rational_function(const ZPoly& num, const ZPoly& den);
  static Scalar rational_function(const QPoly& num, const QPoly& den);
  static Scalar cyclotomic(std::shared_ptr<const CyclotomicField> field, const QPoly& residue);

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;

  // Defined only for the matching domain.
  const mpq_class& as_rational() const;
  const ZPoly& numerator() const;
  const ZPoly& denominator() const;
  const QPoly& residue() const;
  int cyclotomic_order() const;

  // True when the value is a polynomial in q with integer coefficients
  // (rational functions with denominator 1; integer rationals).
  bool is_integer_polynomial() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical string: "a/b", "(num)/(den)" or "num", "c0 + c1*q (mod Phi_d)".
  std::string str() const;

  // Form usable as a coefficient factor inside a larger expression, without
  // the "(mod Phi_d)" suffix: multi-term values are parenthesized.
  std::string coefficient_str() const;

  // Sign heuristic used by renderers to print "a - b" instead of "a + -b".
  bool looks_negative() const;

  // Rough size used to prefer simple pivots during elimination.
  std::size_t complexity() const;

 private:
  struct RatFunc {
    ZPoly num, den;
  };
  struct Residue {
    std::shared_ptr<const CyclotomicField> field;
    QPoly r;
  };

  template <class T>
  explicit Scalar(T v) : v_(std::move(v)) {}

  static Scalar canonical_ratfunc(ZPoly num, ZPoly den);

  std::variant<mpq_class, RatFunc, Residue> v_;
};

std::string domain_name(Scalar::Domain d);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

namespace detail {

// Memo table shared by all copies of one QMode. Values are computed outside
// the lock, so a computation may itself consult the memo.
class ModeCache {
 public:
  using Key = std::array<long, 4>;

  Scalar get_or_compute(const Key& key, const std::function<Scalar()>& compute);

 private:
  std::mutex mu_;
  std::map<Key, Scalar> table_;
};

}  // namespace detail

class QMode {
 public:
  enum class Kind { Rational, Symbolic, RootOfUnity };

  static QMode rational(const mpq_class& q);
  static QMode symbolic();
  static QMode root_of_unity(int d);

  Kind kind() const { return kind_; }
  const mpq_class& rational_value() const { return value_; }
  int root_order() const { return order_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar q() const;
  Scalar from_rational(const mpq_class& v) const;
  Scalar from_int(long v) const { return from_rational(mpq_class(v)); }
  // q^n for any integer n.
  Scalar q_power(long n) const;

  bool is_free_type() const;
  // d for torsion type, nullopt for free type.
  std::optional<int> torsion_order() const;

  // Whether q may appear as a symbol in input expressions.
  bool allows_q_symbol() const { return kind_ != Kind::Rational; }

  // "2", "5/3", "symbolic", "root:6"; accepted back by parse_mode.
  std::string name() const;

  bool owns(const Scalar& s) const;

  detail::ModeCache& cache() const { return *cache_; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  friend bool operator==(const QMode& a, const QMode& b);
  friend bool operator!=(const QMode& a, const QMode& b) { return !(a == b); }

 private:
  QMode() = default;

  Kind kind_ = Kind::Symbolic;
  mpq_class value_ = 0;
  int order_ = 0;
  std::shared_ptr<const CyclotomicField> field_;
  std::shared_ptr<detail::ModeCache> cache_;
};

// Phi_d, obtained by dividing q^d - 1 by Phi_e for every proper divisor e.
ZPoly cyclotomic_polynomial(int d);

// {n}_q = (q^n - 1)/(q - 1), or n when q = 1; any integer n.
Scalar q_integer(long n, const QMode& mode);

// {1}_q {2}_q ... {n}_q, n >= 0.
Scalar q_factorial(long n, const QMode& mode);

// Gaussian binomial via the q-Pascal rule, so it stays defined at roots of unity.
Scalar q_binomial(long n, long k, const QMode& mode);

// True iff {n}_q != 0 for every n != 0.
bool is_root_of_unity_obstruction(const QMode& mode);

}  // namespace hq
