#pragma once

// Dense univariate polynomials over Z (mpz_class) and Q (mpq_class).
//
// Coefficients are stored in ascending order and the vector is kept trimmed,
// so the zero polynomial is the empty vector and degree() is -1 for it.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hq {

template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const C& v) { return UPoly(std::vector<C>{v}); }
  static UPoly monomial(const C& v, std::size_t k) {
    std::vector<C> c(k + 1, C(0));
    c[k] = v;
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<C>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& lc() const { return c_.back(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  UPoly scaled(const C& s) const {
    if (s == 0) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  // Multiply by X^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> r(k, C(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

  C eval(const C& x) const {
    C acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using ZPoly = UPoly<mpz_class>;
using QPoly = UPoly<mpq_class>;

QPoly to_qpoly(const ZPoly& p);

// Requires every coefficient of p to be an integer.
ZPoly to_zpoly(const QPoly& p);

// Quotient and remainder in Q[X]; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Monic gcd in Q[X]; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

// Bezout: returns (g, s) with s*a = g (mod b), g = gcd(a, b) monic.
std::pair<QPoly, QPoly> half_extended_gcd(const QPoly& a, const QPoly& b);

mpz_class content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// Primitive gcd in Z[X] with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// a / b if b divides a exactly in Z[X], nullopt otherwise.
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);

// Q-multiple of p with integer coprime coefficients; returns (zp, factor)
// such that p = zp / factor.
std::pair<ZPoly, mpq_class> clear_denominators(const QPoly& p);

// "3*q^2 - q + 1" (descending) and "1 - q + 3*q^2" (ascending).
std::string format_descending(const ZPoly& p, const std::string& var);
std::string format_descending(const QPoly& p, const std::string& var);
std::string format_ascending(const QPoly& p, const std::string& var);

}  // namespace hq
