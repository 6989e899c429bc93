#include "hq/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "hq/eliminant.hpp"
#include "hq/errors.hpp"
#include "hq/format.hpp"

namespace hq {

LaurentVector::LaurentVector(QMode mode, long lo, std::vector<Scalar> coeffs)
    : mode_(std::move(mode)), lo_(lo), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!mode_.owns(c)) throw Error(ErrorCode::MixedDomains, "coefficient does not belong to mode " + mode_.name());
  trim();
}

LaurentVector LaurentVector::monomial(const QMode& mode, long n, const Scalar& c) {
  return LaurentVector(mode, n, {c});
}

void LaurentVector::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  auto first = std::find_if(c_.begin(), c_.end(), [](const Scalar& s) { return !s.is_zero(); });
  lo_ += first - c_.begin();
  c_.erase(c_.begin(), first);
  if (c_.empty()) lo_ = 0;
}

Scalar LaurentVector::coefficient(long n) const {
  if (n < lo_ || n > hi()) return mode_.zero();
  return c_[n - lo_];
}

LaurentVector& LaurentVector::operator+=(const LaurentVector& o) {
  if (mode_ != o.mode_) throw Error(ErrorCode::MixedModes, mode_.name() + " vs " + o.mode_.name());
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
  std::vector<Scalar> c(hi - lo + 1, mode_.zero());
  for (long n = lo_; n <= this->hi(); ++n) c[n - lo] = c_[n - lo_];
  for (long n = o.lo_; n <= o.hi(); ++n) c[n - lo] += o.c_[n - o.lo_];
  lo_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

LaurentVector& LaurentVector::operator-=(const LaurentVector& o) { return *this += (-o.mode_.one()) * o; }

LaurentVector operator*(const Scalar& s, const LaurentVector& v) {
  std::vector<Scalar> c;
  c.reserve(v.c_.size());
  for (const auto& x : v.c_) c.push_back(s * x);
  return LaurentVector(v.mode_, v.lo_, std::move(c));
}

std::string LaurentVector::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    detail::append_term(out, c_[k], detail::power_str("t", lo_ + static_cast<long>(k)));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentVector& v) { return os << v.str(); }

// ---------------------------------------------------------------------------

LaurentVector apply_M(const LaurentVector& v) {
  if (v.is_zero()) return v;
  return LaurentVector(v.mode(), v.lo() + 1, v.coeffs());
}

LaurentVector apply_Dq(const LaurentVector& v) {
  if (v.is_zero()) return v;
  std::vector<Scalar> c;
  c.reserve(v.coeffs().size());
  for (long n = v.lo(); n <= v.hi(); ++n) c.push_back(v.coefficient(n) * q_integer(n, v.mode()));
  return LaurentVector(v.mode(), v.lo() - 1, std::move(c));
}

Action apply_element(const HqElement& p, const LaurentVector& v) {
  if (p.mode() != v.mode()) throw Error(ErrorCode::MixedModes, p.mode().name() + " vs " + v.mode().name());
  const QMode& mode = v.mode();
  ActionReport report;
  report.input_lo = v.lo();
  report.input_hi = v.hi();
  if (v.is_zero() || p.is_zero()) return {LaurentVector(mode), report};

  long min_shift = 0, max_shift = 0;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    const long shift = static_cast<long>(mono.b) - mono.a;
    min_shift = first ? shift : std::min(min_shift, shift);
    max_shift = first ? shift : std::max(max_shift, shift);
    first = false;
  }
  report.output_lo = v.lo() + min_shift;
  report.output_hi = v.hi() + max_shift;

  std::vector<Scalar> out(report.output_hi - report.output_lo + 1, mode.zero());
  for (const auto& [mono, c] : p.terms()) {
    for (long n = v.lo(); n <= v.hi(); ++n) {
      const Scalar& x = v.coeffs()[n - v.lo()];
      if (x.is_zero()) continue;
      // D_q^a t^n = {n}{n-1}...{n-a+1} t^{n-a}
      Scalar w = c * x;
      for (long k = 0; k < mono.a && !w.is_zero(); ++k) w *= q_integer(n - k, mode);
      if (w.is_zero()) continue;
      out[n - mono.a + mono.b - report.output_lo] += w;
    }
  }
  return {LaurentVector(mode, report.output_lo, std::move(out)), report};
}

bool homomorphism_check(const HqElement& x, const HqElement& y, const LaurentVector& v) {
  return apply_element(normal_product(x, y), v).result == apply_element(x, apply_element(y, v).result).result;
}

bool joint_eigen_demo(const HqElement& p, const HqElement& q, const Scalar& lambda0, const Scalar& mu0,
                      const LaurentVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::NotAnEigenvector, "the zero vector is not an eigenvector");
  if (apply_element(p, v).result != lambda0 * v)
    throw Error(ErrorCode::NotAnEigenvector, "P v != lambda0 v for v = " + v.str());
  if (apply_element(q, v).result != mu0 * v)
    throw Error(ErrorCode::NotAnEigenvector, "Q v != mu0 v for v = " + v.str());

  const TriPoly delta = eliminant_determinant(build_eliminant_matrix(p, q));
  // Delta(M, lambda0, mu0) = sum_i d_i M^i
  std::map<int, Scalar> by_m;
  for (const auto& [e, c] : delta.terms()) {
    Scalar term = c;
    for (int k = 0; k < e[kVarLambda]; ++k) term *= lambda0;
    for (int k = 0; k < e[kVarMu]; ++k) term *= mu0;
    auto [it, inserted] = by_m.try_emplace(e[kVarM], term);
    if (!inserted) it->second += term;
  }
  HqElement specialized(p.mode());
  for (const auto& [i, c] : by_m) specialized.add_term(i, 0, c);
  return apply_element(specialized, v).result.is_zero();
}

}  // namespace hq
