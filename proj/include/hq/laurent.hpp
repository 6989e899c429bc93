#pragma once

// Truncated model of the module of Laurent series in t, with A acting as the
// q-derivative D_q t^n = {n}_q t^{n-1} and B as M t^n = t^{n+1}.
//
// Vectors have finite support and operators widen the window instead of
// clipping it, so every computed action is exact.

#include <iosfwd>
#include <string>
#include <vector>

#include "hq/element.hpp"

namespace hq {

class LaurentVector {
 public:
  explicit LaurentVector(QMode mode) : mode_(std::move(mode)) {}
  // coeffs[k] is the coefficient of t^{lo+k}; zero fringes are trimmed.
  LaurentVector(QMode mode, long lo, std::vector<Scalar> coeffs);

  static LaurentVector monomial(const QMode& mode, long n, const Scalar& c);
  static LaurentVector monomial(const QMode& mode, long n) { return monomial(mode, n, mode.one()); }

  const QMode& mode() const { return mode_; }
  // Window of the trimmed support; [0, -1] for the zero vector.
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coefficient(long n) const;

  LaurentVector& operator+=(const LaurentVector& o);
  LaurentVector& operator-=(const LaurentVector& o);
  friend LaurentVector operator+(LaurentVector a, const LaurentVector& b) { return a += b; }
  friend LaurentVector operator-(LaurentVector a, const LaurentVector& b) { return a -= b; }
  friend LaurentVector operator*(const Scalar& s, const LaurentVector& v);

  friend bool operator==(const LaurentVector& a, const LaurentVector& b) {
    return a.mode_ == b.mode_ && a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  // Ascending exponents, e.g. "t^-2 + 3*t^5".
  std::string str() const;

 private:
  void trim();

  QMode mode_;
  long lo_ = 0;
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentVector& v);

LaurentVector apply_M(const LaurentVector& v);
LaurentVector apply_Dq(const LaurentVector& v);

struct ActionReport {
  long input_lo = 0, input_hi = -1;
  // Window reached before trimming: [lo + min(b - a), hi + max(b - a)] over
  // the monomials B^b A^a of the element.
  long output_lo = 0, output_hi = -1;
  // Always false in this model; kept so callers can assert exactness.
  bool boundary_loss = false;
};

struct Action {
  LaurentVector result;
  ActionReport report;
};

// B^b A^a acts as M^b D_q^a.
Action apply_element(const HqElement& p, const LaurentVector& v);

// (XY) v == X (Y v).
bool homomorphism_check(const HqElement& x, const HqElement& y, const LaurentVector& v);

// Checks P v = lambda0 v and Q v = mu0 v (NotAnEigenvector otherwise), then
// whether Delta_{P,Q}(M, lambda0, mu0) v = 0.
bool joint_eigen_demo(const HqElement& p, const HqElement& q, const Scalar& lambda0, const Scalar& mu0,
                      const LaurentVector& v);

}  // namespace hq
