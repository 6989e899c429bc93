#pragma once

// Sparse commutative polynomials in N variables over Scalar.
//
// The Order functor fixes both the display order and the monomial order used
// by exact division; it must be a monomial order (compatible with
// multiplication), listing the leading monomial first.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hq/errors.hpp"
#include "hq/format.hpp"
#include "hq/scalar.hpp"

namespace hq {

template <std::size_t N, class Order>
class CommPoly {
 public:
  using Exponents = std::array<int, N>;
  using Terms = std::map<Exponents, Scalar, Order>;

  explicit CommPoly(QMode mode) : mode_(std::move(mode)) {}

  static CommPoly constant(const QMode& mode, const Scalar& c) {
    CommPoly p(mode);
    p.add_term(Exponents{}, c);
    return p;
  }
  static CommPoly variable(const QMode& mode, std::size_t var, int power = 1) {
    CommPoly p(mode);
    Exponents e{};
    e[var] = power;
    p.add_term(e, mode.one());
    return p;
  }

  const QMode& mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mode_.zero() : it->second;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Highest exponent of one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  CommPoly operator-() const {
    CommPoly r(mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  CommPoly& operator+=(const CommPoly& o) {
    check_mode(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    check_mode(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }

  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    a.check_mode(b);
    CommPoly r(a.mode_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
  }
  friend CommPoly operator*(const Scalar& s, const CommPoly& a) {
    CommPoly r(a.mode_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  // Quotient of an exact division; throws if divisor does not divide *this.
  CommPoly exact_divide(const CommPoly& divisor) const {
    check_mode(divisor);
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto& [lead_e, lead_c] = *divisor.terms_.begin();
    CommPoly quot(mode_), rem = *this;
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.begin();
      Exponents qe{};
      for (std::size_t i = 0; i < N; ++i) {
        qe[i] = re[i] - lead_e[i];
        if (qe[i] < 0) throw std::logic_error("CommPoly::exact_divide: division is not exact");
      }
      Scalar qc = rc / lead_c;
      quot.add_term(qe, qc);
      CommPoly step(mode_);
      for (const auto& [e, c] : divisor.terms_) step.terms_.emplace(add_exponents(e, qe), c * qc);
      rem -= step;
    }
    return quot;
  }

  // Collects the coefficient of var^power as a polynomial in the other variables.
  CommPoly coefficient_of(std::size_t var, int power) const {
    CommPoly r(mode_);
    for (const auto& [e, c] : terms_) {
      if (e[var] != power) continue;
      Exponents f = e;
      f[var] = 0;
      r.terms_.emplace(f, c);
    }
    return r;
  }

  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.mode_ == b.mode_ && a.terms_ == b.terms_; }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

  std::string str(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) mono = detail::join_factors(mono, detail::power_str(names[i], e[i]));
      detail::append_term(out, c, mono);
    }
    return out;
  }

 private:
  static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < N; ++i) {
      if (__builtin_add_overflow(a[i], b[i], &r[i])) throw Error(ErrorCode::Overflow, "exponent overflow");
    }
    return r;
  }

  void check_mode(const CommPoly& o) const {
    if (mode_ != o.mode_) throw Error(ErrorCode::MixedModes, mode_.name() + " vs " + o.mode_.name());
  }

  QMode mode_;
  Terms terms_;
};

// Total degree first, then lexicographic with variable 0 most significant;
// leading monomial first.
template <std::size_t N>
struct GradedLexDescending {
  bool operator()(const std::array<int, N>& a, const std::array<int, N>& b) const {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < N; ++i) {
      sa += a[i];
      sb += b[i];
    }
    if (sa != sb) return sa > sb;
    return a > b;
  }
};

// Bivariate polynomial F(x, y); variable 0 is x.
using BiPoly = CommPoly<2, GradedLexDescending<2>>;

}  // namespace hq
